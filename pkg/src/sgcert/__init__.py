"""Certified verification of a subgroup-count bound for finite groups.

Exact rational interval arithmetic (:mod:`sgcert.certified`), the bound's
constants (:mod:`sgcert.sgbound`), the lemmas' exceptional ranges
(:mod:`sgcert.lemmas`), the sweep over those ranges (:mod:`sgcert.corollary`)
and brute-force subgroup enumeration of small groups (:mod:`sgcert.groups`).
"""

from .certificate import Certificate, exit_code
from .certified import CertReal, Outcome, Verdict, certified_compare, certify_le, certify_lt
from .corollary import factorize, load_manifest, sweep, verify_corollary1
from .groups import check_theorem, enumerate_subgroups, make_group, sylow_census
from .lemmas import exception_set, maximize_eps, section4_checks, threshold_cofactor, verify_lemma
from .sgbound import S, bound_B, c_enclosure, C_enclosure, gaussian_binomial, subgroup_sum

__version__ = "0.1.0"

__all__ = [
    "Certificate", "exit_code", "CertReal", "Outcome", "Verdict", "certified_compare", "certify_le",
    "certify_lt", "factorize", "load_manifest", "sweep", "verify_corollary1", "check_theorem",
    "enumerate_subgroups", "make_group", "sylow_census", "exception_set", "maximize_eps",
    "section4_checks", "threshold_cofactor", "verify_lemma", "S", "bound_B", "c_enclosure",
    "C_enclosure", "gaussian_binomial", "subgroup_sum",
]
