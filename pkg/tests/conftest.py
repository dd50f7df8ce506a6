import pytest
from hypothesis import HealthCheck, settings

from parabolica.isotropy import enumerate_types
from parabolica.models import load_zoo
from parabolica.sl2 import standard_partner

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ZOO_IDS = [e.id for e in load_zoo()]
SMALL_IDS = ["sl(3,R)/p1", "sl(4,R)/p2", "o(2,3)", "sp(4,R)"]


def zoo_model(model_id):
    for e in load_zoo():
        if e.id == model_id:
            return e.build()
    raise KeyError(model_id)


def typed_triples(model):
    return [(t, standard_partner(model, t.representative)) for t in enumerate_types(model)]


@pytest.fixture(scope="session")
def zoo():
    return {e.id: e.build() for e in load_zoo()}


def pytest_terminal_summary(terminalreporter):
    import test_acceptance
    if test_acceptance.ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
