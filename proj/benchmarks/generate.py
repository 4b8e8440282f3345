#!/usr/bin/env python3
# Copyright 2026 The qarch Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the bundled desk-scale benchmark programs (CNOT + 1q gates)."""

import math
import pathlib
import random


class Program:
    def __init__(self, n):
        self.n = n
        self.lines = []

    def g1(self, name, q, param=None):
        p = f"({param})" if param is not None else ""
        self.lines.append(f"{name}{p} q[{q}];")

    def cx(self, a, b):
        self.lines.append(f"cx q[{a}],q[{b}];")

    def ccx(self, a, b, c):
        # Standard 6-CNOT Toffoli decomposition.
        self.g1("h", c)
        self.cx(b, c)
        self.g1("tdg", c)
        self.cx(a, c)
        self.g1("t", c)
        self.cx(b, c)
        self.g1("tdg", c)
        self.cx(a, c)
        self.g1("t", b)
        self.g1("t", c)
        self.g1("h", c)
        self.cx(a, b)
        self.g1("t", a)
        self.g1("tdg", b)
        self.cx(a, b)

    def cu1(self, theta, a, b):
        self.g1("u1", a, f"{theta / 2:.6f}")
        self.cx(a, b)
        self.g1("u1", b, f"{-theta / 2:.6f}")
        self.cx(a, b)
        self.g1("u1", b, f"{theta / 2:.6f}")

    def measure_all(self):
        for q in range(self.n):
            self.lines.append(f"measure q[{q}] -> c[{q}];")

    def text(self):
        head = ['OPENQASM 2.0;', 'include "qelib1.inc";', f"qreg q[{self.n}];", f"creg c[{self.n}];"]
        return "\n".join(head + self.lines) + "\n"


def ising(n=10, steps=3):
    p = Program(n)
    for q in range(n):
        p.g1("h", q)
    for _ in range(steps):
        for i in range(n - 1):
            p.cx(i, i + 1)
            p.g1("rz", i + 1, "0.300000")
            p.cx(i, i + 1)
        for q in range(n):
            p.g1("rx", q, "0.200000")
    p.measure_all()
    return p


def qft(n=8):
    p = Program(n)
    for i in range(n):
        p.g1("h", i)
        for j in range(i + 1, n):
            p.cu1(math.pi / 2 ** (j - i), j, i)
    p.measure_all()
    return p


def cuccaro_adder(bits=4):
    # Register layout: c, (b0, a0), (b1, a1), ..., z.
    n = 2 * bits + 2
    p = Program(n)
    cin, z = 0, n - 1
    b = [1 + 2 * i for i in range(bits)]
    a = [2 + 2 * i for i in range(bits)]

    def maj(x, y, w):
        p.cx(w, y)
        p.cx(w, x)
        p.ccx(x, y, w)

    def uma(x, y, w):
        p.ccx(x, y, w)
        p.cx(w, x)
        p.cx(x, y)

    for i in range(bits):
        p.g1("x", a[i])
    maj(cin, b[0], a[0])
    for i in range(1, bits):
        maj(a[i - 1], b[i], a[i])
    p.cx(a[bits - 1], z)
    for i in reversed(range(1, bits)):
        uma(a[i - 1], b[i], a[i])
    uma(cin, b[0], a[0])
    p.measure_all()
    return p


def uccsd_like(n=8, seed=7):
    # Exponentials of Pauli strings: CNOT ladders give the strong chain, a few
    # direct long-range entanglers add weak off-chain coupling.
    rng = random.Random(seed)
    p = Program(n)
    excitations = [(i, j) for i in range(n) for j in range(i + 1, n) if j - i <= 3]
    for i, j in excitations:
        for q in (i, j):
            p.g1("h", q)
        for k in range(i, j):
            p.cx(k, k + 1)
        p.g1("rz", j, "0.100000")
        for k in reversed(range(i, j)):
            p.cx(k, k + 1)
        for q in (i, j):
            p.g1("h", q)
    chain = sum(j - i for i, j in excitations) * 2
    for _ in range(chain // 10):
        x, y = rng.sample(range(n), 2)
        if abs(x - y) > 1:
            p.cx(x, y)
    p.measure_all()
    return p


def clustered_arith(n=13, seed=11):
    # Heavy traffic between {7,8,9,10} and {10,11,12}; q0..q5 never interact
    # with each other.
    rng = random.Random(seed)
    p = Program(n)
    left, right = [7, 8, 9, 10], [10, 11, 12]
    for _ in range(6):
        c1, c2 = rng.sample(left, 2)
        t = rng.choice([r for r in right if r not in (c1, c2)])
        p.ccx(c1, c2, t)
    for q in range(7):
        p.cx(q, rng.choice(left + right[1:]))
    for _ in range(8):
        x = rng.choice(left)
        y = rng.choice([r for r in right if r != x])
        p.cx(x, y)
    p.measure_all()
    return p


def qaoa_grid(rows=3, cols=4, layers=2):
    # MaxCut QAOA on a king's-move grid: lattice edges plus one diagonal per
    # cell, the diagonal carrying double weight.
    n = rows * cols
    p = Program(n)
    edges = []
    for r in range(rows):
        for c in range(cols):
            q = r * cols + c
            if c + 1 < cols:
                edges.append((q, q + 1, 1))
            if r + 1 < rows:
                edges.append((q, q + cols, 1))
            if c + 1 < cols and r + 1 < rows and (r + c) % 2 == 0:
                edges.append((q, q + cols + 1, 2))
    for q in range(n):
        p.g1("h", q)
    for _ in range(layers):
        for a, b, w in edges:
            for _ in range(w):
                p.cx(a, b)
                p.g1("rz", b, "0.400000")
                p.cx(a, b)
        for q in range(n):
            p.g1("rx", q, "0.700000")
    p.measure_all()
    return p


def main():
    out = pathlib.Path(__file__).resolve().parent
    programs = {
        "ising_10": ising(),
        "qft_8": qft(),
        "adder_10": cuccaro_adder(),
        "uccsd_8": uccsd_like(),
        "arith_13": clustered_arith(),
        "qaoa_12": qaoa_grid(),
    }
    for name, prog in programs.items():
        (out / f"{name}.qasm").write_text(prog.text())


if __name__ == "__main__":
    main()
