"""Minimal points of sqrt(2): the continued-fraction convergents, rediscovered.

The minimal points of (1, sqrt2) over the full lattice are exactly the
convergent pairs (q, p) of the continued fraction [1; 2, 2, 2, ...], after
the conventional start at (0, 1).  Restricting the approximation set (here:
even x_0 only) changes the sequence; the enumerator treats the set as part
of the problem.
"""

from fractions import Fraction

from simra import minpoints, presets

target, full = presets.load_preset("sqrt2")
seq = minpoints.enumerate_minimal_points(target, full, Fraction(10 ** 4))

print("minimal points of (1, sqrt2) up to |x| <= 10^4:")
print(f"{'i':>3} {'x_0':>6} {'x_1':>6} {'|x|^2':>10}   L(x)")
for e in seq.entries:
    print(f"{e.index:>3} {e.point[0]:>6} {e.point[1]:>6} {e.norm_sq:>10}   "
          f"{float(e.l_value):.3e}")

print()
print("properties (a)+(b) certified:", minpoints.verify_properties(seq) or "ok")
checked = minpoints.verify_minimality(seq)
print(f"property (c) re-verified against {checked} window candidates")

rep = minpoints.dirichlet_check(seq)
print(f"sup X^(1/n) L over the run: {rep.sup_value:.6f} (<= upper "
      f"{rep.sup_upper:.6f}, attained at i={rep.at_index})")

print()
print("same target, x_0 forced even:")
target2, evens = presets.load_preset("sqrt2-even-x0")
seq2 = minpoints.enumerate_minimal_points(target2, evens, Fraction(30))
for e in seq2.entries:
    print(f"  {e.point.coords}  L = {float(e.l_value):.4f}")
print("note the doubled convergent (2,2): scaling a point keeps it in S here")

print()
x = Fraction(10)
print(f"envelope at X = {x}: L = {float(minpoints.envelope(seq, x)):.6f} "
      "(the (5,7) record, 5*sqrt2 - 7)")
