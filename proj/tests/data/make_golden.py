#!/usr/bin/env python3
"""Writes the U0 golden files from closed-form entries.

Values are typed in from the closed forms (sqrt(2) expressions), not computed
by the library, so they serve as an independent reference. Two entries differ
from the originally printed matrices, which are not unitary; those printed
versions are written to the *_printed.json files.
"""
import json
import math
import os

s2 = math.sqrt(2.0)
HERE = os.path.dirname(os.path.abspath(__file__))


def c(z):
    z = complex(z)
    return [z.real, z.imag]


def mat(rows):
    return {"rows": len(rows), "cols": len(rows[0]), "data": [[c(z) for z in r] for r in rows]}


def dump(name, obj):
    with open(os.path.join(HERE, name), "w") as f:
        json.dump(obj, f, indent=2)
        f.write("\n")


u0 = [
    [1j / s2, 1j / s2, 0],
    [-1j / 2, 1j / 2, 1j / s2],
    [-0.5, 0.5, -1 / s2],
]

r_u1 = [
    [-1 / s2, 0.5, 1j / 2],
    [0.5, (2 + s2) / 4, -1j / (4 + 2 * s2)],
    [-1j / 2, 1j / (4 + 2 * s2), (2 + s2) / 4],
]
r_u2 = [
    [1, 0, 0],
    [0, -1 / s2, -1j * (1 + s2) / (2 + s2)],
    [0, 1j * (1 + s2) / (2 + s2), 1 / s2],
]
coset_1 = [
    [1 / s2, 0.5, 1j / 2],
    [-0.5, (2 + s2) / 4, -1j / (4 + 2 * s2)],
    [1j / 2, 1j / (4 + 2 * s2), (2 + s2) / 4],
]
coset_2 = [
    [1, 0, 0],
    [0, 1 / s2, -1j * (1 + s2) / (2 + s2)],
    [0, -1j * (1 + s2) / (2 + s2), 1 / s2],
]
rev_1_printed = [
    [1 / s2, 0.5, 0],
    [-1 / s2, 1 / s2, 0],
    [0, 0, 1],
]
rev_1 = [
    [1 / s2, 1 / s2, 0],
    [-1 / s2, 1 / s2, 0],
    [0, 0, 1],
]
rev_2 = [
    [1, 0, 0],
    [0, 1 / s2, 1 / s2],
    [0, -1 / s2, 1 / s2],
]



def printed_corner(m):
    out = [list(r) for r in m]
    out[2][2] = (2 + 2 * s2) / 4
    return out


dump("u0.json", mat(u0))
dump("u0_householder.json", {
    "kind": "householder", "dim": 3,
    "factors": [mat(r_u1), mat(r_u2)],
    "phases": [c(-1j), c(-1j), c(-1)],
    "pivot_phases": [math.pi / 2, math.pi / 2],
})
dump("u0_coset.json", {
    "kind": "coset", "dim": 3,
    "factors": [mat(coset_1), mat(coset_2)],
    "phases": [c(1j), c(1j), c(-1)],
})
dump("u0_householder_printed.json", {
    "kind": "householder", "dim": 3,
    "factors": [mat(printed_corner(r_u1)), mat(r_u2)],
    "phases": [c(-1j), c(-1j), c(-1)],
    "pivot_phases": [math.pi / 2, math.pi / 2],
})
dump("u0_coset_printed.json", {
    "kind": "coset", "dim": 3,
    "factors": [mat(printed_corner(coset_1)), mat(coset_2)],
    "phases": [c(1j), c(1j), c(-1)],
})
dump("u0_coset_reversed.json", {
    "kind": "coset-reversed", "dim": 3,
    "factors": [mat(rev_1), mat(rev_2)],
    "phases": [c(1j), c(1j), c(-1)],
})
dump("u0_coset_reversed_printed.json", {
    "kind": "coset-reversed", "dim": 3,
    "factors": [mat(rev_1_printed), mat(rev_2)],
    "phases": [c(1j), c(1j), c(-1)],
})
dump("diag_2_1.json", mat([[2, 0], [0, 1]]))
dump("identity3.json", mat([[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
