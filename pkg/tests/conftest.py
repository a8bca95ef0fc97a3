import math

import pytest

from spingates import QUBIT_PRESETS, QubitType, qubit_spec_from_params


@pytest.fixture(scope="session")
def preset_specs():
    """paper-2018 QubitSpec per qubit type."""
    return {
        qt: qubit_spec_from_params(qt, QUBIT_PRESETS["paper-2018"][qt.value])
        for qt in QubitType
    }


@pytest.fixture(scope="session")
def pi_half():
    return math.pi / 2
