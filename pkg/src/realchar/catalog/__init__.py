"""Named groups, the descriptor language, |Out(S)| and the K(S) scans."""

from .analytic import (AsymptoticRecord, RealProfile, asymptotic_scan, enumerated_profile,
                       kfunction, non_decreasing, odd_prime_powers, psl2_real_profile,
                       validate_psl2_profile)
from .descriptor import Atom, DescriptorError, Product, Term, canonical, parse
from .entries import (ALMOST_SIMPLE, ALMOST_SIMPLE_PAIRS, CATALOG, AT_MOST_FOUR_REAL_ORDERS,
                      FIVE_REAL_ORDERS, OPTIONAL, SIMPLE, SMALL_KR_QUOTIENTS, CatalogEntry,
                      compute_fingerprints, entries, write_fingerprints)
from .registry import (UnavailableError, build, build_group, family_order, out_order,
                       out_order_bounds)

__all__ = [n for n in dir() if not n.startswith("_")]
