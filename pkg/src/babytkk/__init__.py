"""Exact symbolic engine for the baby TKK algebra and its conformal realization.

The package is layered bottom-up:

* :mod:`babytkk.scalars` -- exact arithmetic over Q(i)
* :mod:`babytkk.lattice` -- the semilattice S in Z^2 and its Jordan algebra
* :mod:`babytkk.tkk` -- the baby TKK algebra from its presentation
* :mod:`babytkk.sp4`, :mod:`babytkk.toroidal` -- sp4 and the 2-toroidal algebra
* :mod:`babytkk.conformal` -- the Lie conformal algebra, its affinization, i_g
* :mod:`babytkk.twist` -- the involution, twisted affinization and phi
* :mod:`babytkk.modules` -- windowed highest-weight module computations
* :mod:`babytkk.parsing`, :mod:`babytkk.suites`, :mod:`babytkk.cli` -- front end
"""

from babytkk.scalars import GaussRational, binom

__all__ = ["GaussRational", "binom"]
__version__ = "0.1.0"
