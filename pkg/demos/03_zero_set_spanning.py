"""The zero set of the witness and its full spanning property.

Product vectors with <xi|W|xi> = 0 come in ten families: six fix two
qubits at basis states and leave one factor free, four lock all three
phases to eighth roots of unity. Their span, and the span of every
partially conjugated image, is the whole 8-dimensional space; the free
families alone only ever reach a 6-dimensional subspace.
"""

import numpy as np

from spanwitness import (
    CANONICAL,
    ZeroFamily,
    ZeroSample,
    all_subsets,
    canonical_ten,
    flatten,
    numerical_rank,
    partial_conjugate,
    realize_zero_vector,
    spanning_report,
    value_on_product,
    witness_matrix,
    zeta_vector,
)

w = witness_matrix(CANONICAL)

print("one vector from each family, with its witness value:")
samples = [
    ZeroSample(family=ZeroFamily.XI_01, params=(1, 1j)),
    ZeroSample(family=ZeroFamily.ETA_0, params=(1, 1)),
    ZeroSample(family=ZeroFamily.ZETA_PARAM_1, params=(0, 1)),
    ZeroSample(family=ZeroFamily.Z1, params=(1.0, 1.0)),
    ZeroSample(family=ZeroFamily.Z3, params=(2.0, 1.0)),
]
for s in samples:
    pv = realize_zero_vector(s, CANONICAL)
    print(f"  {s.family.value:8s} params={s.params}: value = "
          f"{value_on_product(w, pv):+.2e}")

z1 = zeta_vector(ZeroFamily.Z1, 1.0, 1.0, CANONICAL)
print("\nthe phase-locked vector Z1(1,1), flattened:")
print(np.round(flatten(z1), 4))

rep = spanning_report(CANONICAL)
print(f"\nspanning report over {rep.sample_size} sampled zero vectors:")
print("  subset : rank of the partially conjugated images")
for subset, rank in rep.subset_ranks.items():
    label = "{" + ",".join(map(str, subset)) + "}" if subset else "{}"
    print(f"  {label:8s}: {rank}")
print("  full spanning:", rep.full_spanning)

print(f"\nfree-factor families alone: rank {rep.pv1_rank}, orthogonal complement:")
for v in rep.pv1_complement:
    idx = int(np.argmax(np.abs(v)))
    print(f"  basis vector |{idx:03b}>")

print("\nthe ten canonical vectors (six basis + four phase-locked at (1,1))")
ten = canonical_ten(CANONICAL)
ranks = [
    numerical_rank([flatten(partial_conjugate(pv, s)) for pv in ten])
    for s in all_subsets(3)
]
print("ranks under all eight conjugations:", ranks)
