import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from orlicz_kit.norms import QuadratureSettings
from orlicz_kit.young import ExpMinusOneYoung, LLogLYoung, PowerYoung


@pytest.fixture
def settings():
    return QuadratureSettings()


@pytest.fixture
def tight_settings():
    return QuadratureSettings(relative_tolerance=1e-10)


@pytest.fixture(params=["power_2", "llogl", "exp_minus_one"])
def standard_phi(request):
    return {
        "power_2": PowerYoung(2.0),
        "llogl": LLogLYoung(),
        "exp_minus_one": ExpMinusOneYoung(),
    }[request.param]
