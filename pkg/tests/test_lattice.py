from hypothesis import given
from hypothesis import strategies as st

from babytkk.lattice import Stratum, in_S, jordan_mul, monomial, omega, stratum, window_points

WIN = window_points(4)


def test_strata_examples():
    assert stratum((0, 0)) is Stratum.S0
    assert stratum((1, 1)) is Stratum.SPERP
    assert stratum((-3, 2)) is Stratum.S1
    assert omega((1, 0)) == -1 and omega((0, 1)) == 1 and omega((2, 2)) == 0


def test_partition_and_semilattice_law():
    s_points = [p for p in WIN if in_S(p)]
    for p in WIN:
        assert sum(stratum(p) is s for s in Stratum) == 1
    for p in s_points:
        for q in s_points:
            assert in_S((2 * p[0] - q[0], 2 * p[1] - q[1]))


def test_omega_zero_iff_S0_or_Sperp():
    for p in WIN:
        assert (omega(p) == 0) == (stratum(p) in (Stratum.S0, Stratum.SPERP))


def test_jordan_examples():
    assert jordan_mul(monomial(1, 0), monomial(1, 2)) == monomial(2, 2)
    assert not jordan_mul(monomial(1, 0), monomial(0, 1))
    for p in window_points(2, only_S=True):
        assert jordan_mul(monomial(0, 0), monomial(*p)) == monomial(*p)


def test_jordan_commutative_and_identity():
    pts = window_points(2, only_S=True)
    for p in pts:
        a = monomial(*p)
        a2 = jordan_mul(a, a)
        for q in pts:
            b = monomial(*q)
            assert jordan_mul(a, b) == jordan_mul(b, a)
            assert jordan_mul(jordan_mul(a2, b), a) == jordan_mul(a2, jordan_mul(b, a))


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_stratum_by_parity(m, n):
    expected = {(0, 0): Stratum.S0, (1, 0): Stratum.S1, (0, 1): Stratum.S2, (1, 1): Stratum.SPERP}[(m % 2, n % 2)]
    assert stratum((m, n)) is expected
