from __future__ import annotations

import pytest

from btzeta import ApartmentSpec, BallSpec, TypedComplex
from btzeta.generators import gen_apartment_torus, gen_building_ball, gen_cycle_complex


@pytest.fixture(scope="session")
def three_cycle() -> TypedComplex:
    return gen_cycle_complex(3)


@pytest.fixture(scope="session")
def six_cycle() -> TypedComplex:
    return gen_cycle_complex(6)


@pytest.fixture(scope="session")
def single_chamber() -> TypedComplex:
    return TypedComplex(
        vertices=[(0, 0), (1, 1), (2, 2)],
        edges=[(0, 1), (1, 2), (0, 2)],
        chambers=[(0, 1, 2)],
    )


@pytest.fixture(scope="session")
def torus_spec() -> ApartmentSpec:
    return ApartmentSpec(((3, 0), (0, 3)))


@pytest.fixture(scope="session")
def torus(torus_spec) -> TypedComplex:
    return gen_apartment_torus(torus_spec)


@pytest.fixture(scope="session")
def skew_torus_spec() -> ApartmentSpec:
    # columns (3,0) and (1,4): a non-diagonal type-preserving lattice
    return ApartmentSpec(((3, 1), (0, 4)))


@pytest.fixture(scope="session")
def skew_torus(skew_torus_spec) -> TypedComplex:
    return gen_apartment_torus(skew_torus_spec)


@pytest.fixture(scope="session")
def ball_q2(request) -> TypedComplex:
    return gen_building_ball(BallSpec(q=2, radius=1))


@pytest.fixture(scope="session")
def ball_q3() -> TypedComplex:
    return gen_building_ball(BallSpec(q=3, radius=1))


@pytest.fixture(scope="session")
def ball_q2_r2() -> TypedComplex:
    return gen_building_ball(BallSpec(q=2, radius=2))
