"""Filtering a Grimm class down to its admissible reversal classes.

The search space for triple generators is not all squarefree words but two
families with fixed 6-symbol prefixes whose suffixes are the reversed
prefixes.  A word is admissible when it forms a valid triple all by itself
(together with its two cyclic-shift images), and admissibility survives
reversal, so the survivors are reported as {w, reverse(w)} classes --
palindromes give singleton classes.

Running this at n=35 reproduces the published search-log numbers: censuses
a1/a2 and b1/b2, and the 17 + 23 "Success" representatives.
"""

from brinkhuis import (GrimmClass, admissible_census, admissible_classes,
                       census)

N = 35
index = 0
for gc in GrimmClass:
    classes = admissible_classes(gc, N)
    for rc in classes:
        index += 1
        tail = " (palindromic)" if rc.palindromic else ""
        print(f"Success [{index:3d}]: {rc.representative}{tail}")

for i, gc in enumerate(GrimmClass):
    c = census(gc, N)
    b = admissible_census(gc, N)
    idx = gc.index
    prefix = "Done:  " if i == 0 else "       "
    print(f"{prefix}a{idx}={c.a:3d}, a{idx}p={c.a_p:3d}, a{idx}n={c.a_n:3d};"
          f"   b{idx}={b.b:3d}, b{idx}p={b.b_p:3d}, b{idx}n={b.b_n:3d}")
