import random
from fractions import Fraction

import pytest
from hypothesis import settings

from desargues.plane import PlaneModel
from desargues.scalars import Quaternion, RingDescriptor

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def Q():
    return PlaneModel(RingDescriptor.rational())


@pytest.fixture
def H():
    return PlaneModel(RingDescriptor.quaternion())


@pytest.fixture
def gf():
    return lambda p: PlaneModel(RingDescriptor.gf(p))


@pytest.fixture
def rng():
    return random.Random(12345)


def quat(a=0, b=0, c=0, d=0):
    return Quaternion(Fraction(a), Fraction(b), Fraction(c), Fraction(d))


def schema_validator(name):
    """jsonschema validator for a bundled schema, with sibling $refs resolvable."""
    import jsonschema
    from referencing import Registry, Resource

    from desargues.reports import load_schema

    resources = []
    for other in ("trace", "run", "suite_report"):
        s = load_schema(other)
        resources.append((s["$id"], Resource.from_contents(s)))
    registry = Registry().with_resources(resources)
    schema = load_schema(name)
    cls = jsonschema.validators.validator_for(schema)
    cls.check_schema(schema)
    return cls(schema, registry=registry)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
