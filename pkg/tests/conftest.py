import pytest

from colourgl.presets import glq_space, green_space, super_space, z2z2_space


@pytest.fixture
def super11():
    return super_space(1, 1)


@pytest.fixture
def super21():
    return super_space(2, 1)


@pytest.fixture
def super12():
    return super_space(1, 2)


@pytest.fixture
def super22():
    return super_space(2, 2)


@pytest.fixture
def super20():
    return super_space(2, 0)


@pytest.fixture
def z2z2_all():
    return z2z2_space((1, 1, 1, 1))


@pytest.fixture
def glq11():
    return glq_space(1, 1)


@pytest.fixture
def glq21():
    return glq_space(2, 1)


@pytest.fixture
def green2():
    return green_space(2)
