"""The going-up subspace families of a minimal-point sequence.

For each start index i0, the dimension-jump indices i_0 < i_1 < ... mark
where the span of consecutive minimal points grows.  Scanning backward from
each jump yields two nested families of subspaces (dimensions k and k+1)
whose sum/intersection/chain identities hold exactly -- they are theorems,
so a failure would be a bug, not a property of the data.  The interesting
measured quantities are the height-product ratios per level and the
norm-product ratio per start index.
"""

from fractions import Fraction

from simra import construction, minpoints, presets

target, full = presets.load_preset("cbrt2")
seq = minpoints.enumerate_minimal_points(target, full, Fraction(10 ** 4))
print(f"cbrt2 target: {len(seq.entries)} minimal points up to 10^4")

indices = construction.select_indices(seq, 0)
print("jump indices from i0=0:", indices)

fam = construction.build_subspace_family(seq, indices)
print("s-table (t, k) -> s:", {f"{t},{k}": s for (t, k), s in sorted(fam.s.items())})

rep = construction.verify_family_identities(fam)
print(f"identities: {sum(c['pass'] for c in rep['checks'])}/"
      f"{len(rep['checks'])} pass (all exact)")

for k in range(1, fam.n):
    lv = construction.lemma32_check(fam, k)
    print(f"level {k} height products: lhs^2 = {lv['lhsSq']}, "
          f"rhs^2 = {lv['rhsSq']}, ratio = {lv['ratio']:.6f}")

print()
print("norm-product ratio per admissible start index:")
i0 = 0
while True:
    try:
        r = construction.theorem31_ratio(seq, i0)
    except construction.InsufficientData:
        break
    print(f"  i0={i0}: indices {r['indices']}, ratio = {float(r['ratio']):.4f}")
    i0 += 1
print("bounded uniformly in i0 (the sup over i0 is the sequence constant)")
