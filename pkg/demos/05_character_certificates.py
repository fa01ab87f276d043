"""
Character-sum certificates for ordered arrays
=============================================

"""

# Each row of an ordered array pairs with a digit-function tuple to
# give a product of roots of unity.  For a family of functions whose
# pairwise differences stay within the depth budget, the Gram matrix
# of character vectors must equal b**m times the identity — a
# machine-checkable certificate that the family cannot exceed b**m
# functions.
from evnets import (net_to_mooa, enumerate_profiles, build_block_family,
                    char_vector, gram_certificate)
from evnets.corpus import hammersley

arr = net_to_mooa(hammersley(2, 3), 0, (1, 1))
print("base", arr.base, "m", arr.m, "beta", arr.beta)

# Families are indexed by depth profiles kappa (blocks used per
# coordinate).  The maximal profiles exhaust the budget.
profiles = enumerate_profiles(arr.m, arr.u, arr.e, arr.beta, "maximal")
print("maximal profiles:", profiles)

for kappa in profiles:
    family = build_block_family(arr, kappa)
    cert = gram_certificate(arr, family)
    print("kappa", kappa, "family size", len(family),
          "certificate:", "PASS" if cert else "FAIL")

# The character vector of the zero function is all ones; any nonzero
# function inside the budget sums to zero across the array's rows.
zero = build_block_family(arr, (0, 0))[0]
print("zero-function vector:", char_vector(arr, zero))
other = build_block_family(arr, (1, 0))[1]
print("nonzero character sum:", complex(round(sum(char_vector(arr, other)).real, 9)))

# On a damaged array the Gram matrix deviates and the certificate
# reports the offending pair of functions.
from evnets.corpus import flip_digit
bad = net_to_mooa(flip_digit(hammersley(2, 3), 1, 0, 1), 0, (1, 1))
cert = gram_certificate(bad, build_block_family(bad, (3, 0)))
print("damaged array certificate:", "PASS" if cert else "FAIL",
      cert.witness["kind"] if cert.witness else "")
