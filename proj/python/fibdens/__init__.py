"""Exact densities and pair correlations of binary strings without adjacent ones.

Exact results come back as :class:`fractions.Fraction`; Binet evaluations and
Monte Carlo estimates are plain floats.
"""

from fractions import Fraction

try:
    from . import _fibdens as _core
except ImportError:  # in-tree build: extension module on sys.path
    import _fibdens as _core

Topology = _core.Topology
LINEAR = Topology.LINEAR
CIRCULAR = Topology.CIRCULAR
ResourceError = _core.ResourceError
Estimate = _core.Estimate

fib = _core.fib
lucas = _core.lucas
fib_float = _core.fib_float
lucas_float = _core.lucas_float
count_states = _core.count_states
enumerate_states = _core.enumerate_states
unrank_state = _core.unrank_state
rank_state = _core.rank_state
brute_pair_counts = _core.brute_pair_counts
fib_pair_counts = _core.fib_pair_counts
lucas_pair_counts = _core.lucas_pair_counts
density_fib_float = _core.density_fib_float
density_lucas_float = _core.density_lucas_float
limit_density_cell = _core.limit_density_cell
bulk_limit_density = _core.bulk_limit_density
sample_state = _core.sample_state
estimate_density = _core.estimate_density
estimate_correlation = _core.estimate_correlation


def _frac(pair):
    return Fraction(*pair)


def _corr(result):
    return {**result, "exact": _frac(result["exact"])}


def brute_density(n, topology, i):
    return _frac(_core.brute_density(n, topology, i))


def brute_correlation(n, topology, k, l):
    return _frac(_core.brute_correlation(n, topology, k, l))


def density_fib(n, i):
    return _frac(_core.density_fib(n, i))


def density_lucas(n):
    return _frac(_core.density_lucas(n))


def corr_fib(n, k, l):
    return _corr(_core.corr_fib(n, k, l))


def corr_lucas(n, k):
    return _corr(_core.corr_lucas(n, k))


def corr_fib_adjacent(n, k):
    return _frac(_core.corr_fib_adjacent(n, k))


def corr_fib_reflect(n, k, l):
    return _frac(_core.corr_fib_reflect(n, k, l))


def corr_lucas_nn(n):
    return _frac(_core.corr_lucas_nn(n))


def corr_lucas_nnn(n):
    return _frac(_core.corr_lucas_nnn(n))


def density_profile(n, topology):
    """List of (cell, exact Fraction, approx float), ascending cell index."""
    return [(i, _frac(exact), approx) for i, exact, approx in _core.density_profile(n, topology)]
