"""
Digit point sets and equidistribution checking
==============================================

"""

# A PointSet stores b**m points in [0,1)**s as explicit base-b digit
# arrays, so every coordinate is an exact dyadic/triadic/... rational.
from evnets import PointSet, verify_net, u_star
from evnets.corpus import hammersley, flip_digit

points = hammersley(2, 3)
print("base", points.base, "precision", points.precision,
      "points", points.count, "dim", points.dim)

# coordinate_value returns an exact fraction built from the digits.
for n in range(points.count):
    print(n, [str(points.coordinate_value(n, i)) for i in range(points.dim)])

# verify_net checks that every admissible box of volume b**(u-m)
# holds exactly b**u points.  The e-vector sets the digit resolution
# per coordinate; (1, 1) is the classical unit-resolution check.
verdict = verify_net(points, 0, (1, 1))
print("quality-0 check:", "PASS" if verdict else "FAIL")

# u_star finds the smallest passing quality parameter by search.
print("u_star:", u_star(points, (1, 1)))

# Damage one digit and the verifier pins the exact box that breaks.
broken = flip_digit(points, 1, 1, 2)
bad = verify_net(broken, 0, (1, 1))
print("after flip:", "PASS" if bad else "FAIL", "witness:", bad.witness)
print("u_star after flip:", u_star(broken, (1, 1)))

# A coarser resolution contract can forgive the same defect: at
# e = (1, 2) the damaged digit sits below the checked precision.
print("u_star at e=(1,2):", u_star(broken, (1, 2)))
