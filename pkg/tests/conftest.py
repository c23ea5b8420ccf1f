from hypothesis import HealthCheck, settings, strategies as st

from carc.generators import random_model

settings.register_profile("default", deadline=None, max_examples=200,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def models(max_n: int = 12, constraint: str = "Any"):
    """Random models drawn through the seeded generator."""
    return st.builds(lambda n, seed: random_model(n, seed, constraint),
                     st.integers(1, max_n), st.integers(0, 2**32))


def proper_models(max_n: int = 12):
    return models(max_n, "Proper")
