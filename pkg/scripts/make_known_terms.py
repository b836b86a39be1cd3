"""Regenerate src/hankel_moments/data/known_terms.json.

Terms come from classical closed forms and convolution identities, never
from the recurrence coefficients, so the registry check stays independent.
"""

import json
from math import comb
from pathlib import Path

N = 30


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def motzkin(n):
    return sum(comb(n, 2 * k) * catalan(k) for k in range(n // 2 + 1))


def central_trinomial(n):
    return sum(comb(n, 2 * k) * comb(2 * k, k) for k in range(n // 2 + 1))


def delannoy(n):
    return sum(comb(n, k) * comb(n + k, k) for k in range(n + 1))


def schroeder(n):
    return sum(comb(n + k, 2 * k) * catalan(k) for k in range(n + 1))


def riordan_terms(count):
    # M_n = R_n + R_{n+1}
    r = [1]
    while len(r) < count:
        r.append(motzkin(len(r) - 1) - r[-1])
    return r


def fine_terms(count):
    # C_n = 2 F_n + F_{n-1} for n >= 1
    f = [1]
    while len(f) < count:
        n = len(f)
        f.append((catalan(n) - f[-1]) // 2)
    return f


def main():
    data = {
        "motzkin": [motzkin(n) for n in range(N)],
        "schroeder_large": [schroeder(n) for n in range(N)],
        "catalan": [catalan(n) for n in range(N)],
        "central_binomial": [comb(2 * n, n) for n in range(N)],
        "central_trinomial": [central_trinomial(n) for n in range(N)],
        "delannoy_central": [delannoy(n) for n in range(N)],
        "riordan": riordan_terms(N),
        "fine": fine_terms(N),
    }
    doc = {name: {"terms": [str(v) for v in terms]} for name, terms in data.items()}
    out = Path(__file__).resolve().parents[1] / "src" / "hankel_moments" / "data" / "known_terms.json"
    lines = [f" {json.dumps(name)}: {json.dumps(entry)}" for name, entry in doc.items()]
    out.write_text("{\n" + ",\n".join(lines) + "\n}\n")


if __name__ == "__main__":
    main()
