"""Regenerate the b-file fixtures used by the OEIS cross-checks.

Values come from brute force and textbook formulas, independent of the Rust
code: A000246 from the double-factorial formula, A008292 by counting descents
over all permutations, A321280 by counting descents over ballot permutations.
"""

from itertools import permutations


def dfact(n):
    r = 1
    while n > 1:
        r *= n
        n -= 2
    return r


def a000246(n):
    return dfact(n - 1) ** 2 if n % 2 == 0 else dfact(n) * dfact(n - 2)


def descents(p):
    return sum(p[i] > p[i + 1] for i in range(len(p) - 1))


def is_ballot(p):
    h = 0
    for i in range(len(p) - 1):
        h += 1 if p[i] < p[i + 1] else -1
        if h < 0:
            return False
    return True


def descent_rows(n, ballot_only):
    row = {}
    for p in permutations(range(1, n + 1)):
        if ballot_only and not is_ballot(p):
            continue
        d = descents(p)
        row[d] = row.get(d, 0) + 1
    return [row[d] for d in sorted(row)]


def write(name, pairs, header):
    with open(name, "w") as f:
        f.write(f"# {header}\n")
        for i, v in pairs:
            f.write(f"{i} {v}\n")


write("b000246.txt", [(n, a000246(n)) for n in range(21)], "A000246, n = 0..20")

flat = [v for n in range(1, 10) for v in descent_rows(n, False)]
write("b008292.txt", list(enumerate(flat, 1)), "A008292 read by rows, n = 1..9")

flat = [v for n in range(1, 10) for v in descent_rows(n, True)]
write("b321280.txt", list(enumerate(flat, 1)), "A321280 read by rows, n = 1..9")
