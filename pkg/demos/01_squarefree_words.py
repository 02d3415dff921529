"""Counting and enumerating squarefree words.

A square is a nonempty block repeated twice in a row ("1212"); a word is
squarefree when it contains no square as a factor.  Over two symbols the
supply dries up immediately, while over three symbols it grows
exponentially -- the growth rate of that supply is what the rest of this
package puts a lower bound on.
"""

from brinkhuis import count_squarefree, enumerate_squarefree, find_square

print("Ternary squarefree counts by length:")
for n in range(1, 15):
    print(f"  n={n:2d}: {count_squarefree(n, 3):6d}")

print("\nBinary squarefree words are a dead end:")
for n in range(1, 6):
    print(f"  n={n}: {count_squarefree(n, 2)} words")
total = sum(count_squarefree(n, 2) for n in range(1, 10))
print(f"  total over all lengths: {total}"
      " (the six words 0, 1, 01, 10, 010, 101)")

print("\nEvery length-4 binary word already contains a square, e.g.:")
for w in ("0110", "0100", "1010"):
    sq = find_square(w)
    print(f"  {w}: square of period {sq.period} starting at index {sq.start}")

print("\nThe first few ternary squarefree words of length 5:")
for w in enumerate_squarefree(5)[:8]:
    print(f"  {w}")
