import math

import pytest

from rwbounds import presets
from rwbounds.distributions import validate
from rwbounds.streams import DEFAULT_SEED


def Phi(x):
    """Standard normal CDF via erf; kept independent of scipy.special."""
    return 0.5 * math.erfc(-x / math.sqrt(2))


def gaussian(mu=1.0, sigma=1.0):
    return validate({"family": "gaussian", "params": {"mu": mu, "sigma": sigma}})


def two_point(p, x_minus=-1.0, x_plus=1.0):
    return validate(
        {"family": "two_point",
         "params": {"x_minus": x_minus, "x_plus": x_plus, "p_plus": p}}
    )


def finite(atoms):
    return validate({"family": "finite_support", "params": {"atoms": atoms}})


def shifted_exponential(theta=1.0, delta=0.5):
    return validate({"family": "shifted_exponential",
                     "params": {"theta": theta, "delta": delta}})


def double_exponential(p=0.75, theta=1.0, mu=1.0):
    return validate({"family": "double_exponential",
                     "params": {"p": p, "theta": theta, "mu": mu}})


@pytest.fixture(scope="session")
def seed():
    return DEFAULT_SEED


@pytest.fixture(scope="session", params=presets.names())
def preset_dist(request):
    return presets.load(request.param)
