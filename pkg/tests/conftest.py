import numpy as np
from hypothesis import HealthCheck, settings

# reproducible property runs: same examples every invocation
settings.register_profile(
    "suite",
    derandomize=True,
    deadline=None,
    max_examples=25,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


def closed_span_grid(lo, hi, n):
    """Uniform samples covering [lo, hi] inclusive (n samples, n-1 gaps).

    The library's grids are half-open, so the nominal upper bound is one
    spacing past hi.
    """
    h = (hi - lo) / (n - 1)
    from oscwave import make_grid

    return make_grid(lo, hi + h, n)


def assert_small(value, bound, label=""):
    assert np.all(np.abs(value) <= bound), f"{label} |{np.max(np.abs(value)):.3e}| > {bound:.1e}"
