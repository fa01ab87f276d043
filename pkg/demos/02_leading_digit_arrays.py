"""
Leading-digit orthogonal arrays from point sets
===============================================

"""

# Reading the first e_i base-b digits of coordinate i as one symbol
# turns a point set into a mixed-alphabet array: column i ranges over
# {0, ..., b**e_i - 1}.
from evnets import net_to_moa, verify_moa, max_strength
from evnets.corpus import hammersley, faure

points = hammersley(2, 3)
array = net_to_moa(points, (1, 2))
print("rows", array.runs, "alphabets", array.alphabets)
for row in array.rows:
    print([int(x) for x in row])

# An array has strength t when every t-column projection hits each
# symbol combination equally often.  A quality-0 net guarantees
# strength t whenever m covers the t largest digit budgets.
print("strength 2:", "PASS" if verify_moa(array, 2) else "FAIL")
print("max strength:", max_strength(array))

# Higher-dimensional example: a base-3 construction in 3 coordinates
# reaches full strength 3.
cubic = net_to_moa(faure(3, 3, 3), (1, 1, 1))
print("faure alphabets", cubic.alphabets, "max strength",
      max_strength(cubic))

# Failures come with a witness naming the columns and the symbol
# tuple whose count is off.
from evnets.corpus import flip_digit
broken = net_to_moa(flip_digit(points, 1, 0, 1), (1, 1))
verdict = verify_moa(broken, 2)
print("damaged array:", "PASS" if verdict else "FAIL", verdict.witness)
