#!/usr/bin/env python3
"""Generate STO-3G FCIDUMP test fixtures with a minimal restricted Hartree-Fock code.

Integrals are evaluated with the McMurchie-Davidson scheme (s and p shells
only), the SCF uses DIIS, and molecular-orbital integrals are written in the
conventional FCIDUMP layout (chemist index order, 8-fold permutation
symmetry, 1-based indices). Reference values for the test suite are written
to testdata/reference.json.

Usage: python3 tools/gen_fixtures.py
"""

import json
import math
import os

import numpy as np
from scipy.special import gammainc, gamma

BOHR_PER_ANGSTROM = 1.0 / 0.52917721092

# STO-3G primitive data: least-squares three-Gaussian fits to Slater 1s/2s/2p
# functions with unit exponent, scaled per element by zeta**2.
EXP_1S = np.array([3.42525091, 0.62391373, 0.16885540]) / 1.24**2
D_1S = np.array([0.15432897, 0.53532814, 0.44463454])
EXP_2SP = np.array([2.9412494, 0.6834831, 0.2222899]) / 1.72**2
D_2S = np.array([-0.09996723, 0.39951283, 0.70011547])
D_2P = np.array([0.15591627, 0.60768372, 0.39195739])

# (Z, zeta_1s, zeta_2sp); zeta_2sp is None for hydrogen.
ELEMENTS = {
    "H": (1, 1.24, None),
    "Li": (3, 2.69, 0.80),
    "Be": (4, 3.68, 1.15),
    "C": (6, 5.67, 1.72),
    "N": (7, 6.67, 1.95),
    "O": (8, 7.66, 2.25),
    "F": (9, 8.65, 2.55),
}


def boys(n, x):
    x = max(x, 0.0)
    if x < 1e-13:
        return 1.0 / (2 * n + 1)
    a = n + 0.5
    return 0.5 * gamma(a) * gammainc(a, x) / x**a


class Primitive:
    __slots__ = ("alpha", "coeff", "center", "lmn")

    def __init__(self, alpha, coeff, center, lmn):
        self.alpha = alpha
        self.coeff = coeff
        self.center = center
        self.lmn = lmn


def primitive_norm(alpha, lmn):
    l, m, n = lmn
    num = (2 * alpha / math.pi) ** 1.5 * (4 * alpha) ** (l + m + n)
    den = 1.0
    for k in (l, m, n):
        den *= math.factorial(2 * k) // (2**k * math.factorial(k)) if k else 1
    # double factorial (2k-1)!! = (2k)!/(2^k k!)
    return math.sqrt(num / den)


def hermite_e(i, j, t, qx, a, b):
    """Hermite expansion coefficient E_t^{ij} for a primitive pair."""
    p = a + b
    mu = a * b / p
    if t < 0 or t > i + j:
        return 0.0
    if i == j == t == 0:
        return math.exp(-mu * qx * qx)
    if j == 0:
        return (
            hermite_e(i - 1, j, t - 1, qx, a, b) / (2 * p)
            - (mu * qx / a) * hermite_e(i - 1, j, t, qx, a, b)
            + (t + 1) * hermite_e(i - 1, j, t + 1, qx, a, b)
        )
    return (
        hermite_e(i, j - 1, t - 1, qx, a, b) / (2 * p)
        + (mu * qx / b) * hermite_e(i, j - 1, t, qx, a, b)
        + (t + 1) * hermite_e(i, j - 1, t + 1, qx, a, b)
    )


def overlap_prim(a, lmn1, ra, b, lmn2, rb):
    p = a + b
    s = (math.pi / p) ** 1.5
    for k in range(3):
        s *= hermite_e(lmn1[k], lmn2[k], 0, ra[k] - rb[k], a, b)
    return s


def kinetic_prim(a, lmn1, ra, b, lmn2, rb):
    l2, m2, n2 = lmn2
    term0 = b * (2 * (l2 + m2 + n2) + 3) * overlap_prim(a, lmn1, ra, b, lmn2, rb)
    term1 = -2 * b**2 * (
        overlap_prim(a, lmn1, ra, b, (l2 + 2, m2, n2), rb)
        + overlap_prim(a, lmn1, ra, b, (l2, m2 + 2, n2), rb)
        + overlap_prim(a, lmn1, ra, b, (l2, m2, n2 + 2), rb)
    )
    term2 = 0.0
    if l2 >= 2:
        term2 += -0.5 * l2 * (l2 - 1) * overlap_prim(a, lmn1, ra, b, (l2 - 2, m2, n2), rb)
    if m2 >= 2:
        term2 += -0.5 * m2 * (m2 - 1) * overlap_prim(a, lmn1, ra, b, (l2, m2 - 2, n2), rb)
    if n2 >= 2:
        term2 += -0.5 * n2 * (n2 - 1) * overlap_prim(a, lmn1, ra, b, (l2, m2, n2 - 2), rb)
    return term0 + term1 + term2


def hermite_coulomb(t, u, v, n, p, pc):
    if t == u == v == 0:
        return (-2 * p) ** n * boys(n, p * float(np.dot(pc, pc)))
    if t > 0:
        val = pc[0] * hermite_coulomb(t - 1, u, v, n + 1, p, pc)
        if t > 1:
            val += (t - 1) * hermite_coulomb(t - 2, u, v, n + 1, p, pc)
        return val
    if u > 0:
        val = pc[1] * hermite_coulomb(t, u - 1, v, n + 1, p, pc)
        if u > 1:
            val += (u - 1) * hermite_coulomb(t, u - 2, v, n + 1, p, pc)
        return val
    val = pc[2] * hermite_coulomb(t, u, v - 1, n + 1, p, pc)
    if v > 1:
        val += (v - 1) * hermite_coulomb(t, u, v - 2, n + 1, p, pc)
    return val


def nuclear_prim(a, lmn1, ra, b, lmn2, rb, rc):
    p = a + b
    rp = (a * np.asarray(ra) + b * np.asarray(rb)) / p
    pc = rp - np.asarray(rc)
    total = 0.0
    for t in range(lmn1[0] + lmn2[0] + 1):
        et = hermite_e(lmn1[0], lmn2[0], t, ra[0] - rb[0], a, b)
        for u in range(lmn1[1] + lmn2[1] + 1):
            eu = hermite_e(lmn1[1], lmn2[1], u, ra[1] - rb[1], a, b)
            for v in range(lmn1[2] + lmn2[2] + 1):
                ev = hermite_e(lmn1[2], lmn2[2], v, ra[2] - rb[2], a, b)
                total += et * eu * ev * hermite_coulomb(t, u, v, 0, p, pc)
    return 2 * math.pi / p * total


def eri_prim(a, lmn1, ra, b, lmn2, rb, c, lmn3, rc, d, lmn4, rd):
    p = a + b
    q = c + d
    alpha = p * q / (p + q)
    rp = (a * np.asarray(ra) + b * np.asarray(rb)) / p
    rq = (c * np.asarray(rc) + d * np.asarray(rd)) / q
    pq = rp - rq
    total = 0.0
    for t in range(lmn1[0] + lmn2[0] + 1):
        e1t = hermite_e(lmn1[0], lmn2[0], t, ra[0] - rb[0], a, b)
        for u in range(lmn1[1] + lmn2[1] + 1):
            e1u = hermite_e(lmn1[1], lmn2[1], u, ra[1] - rb[1], a, b)
            for v in range(lmn1[2] + lmn2[2] + 1):
                e1v = hermite_e(lmn1[2], lmn2[2], v, ra[2] - rb[2], a, b)
                e1 = e1t * e1u * e1v
                if e1 == 0.0:
                    continue
                for tt in range(lmn3[0] + lmn4[0] + 1):
                    e2t = hermite_e(lmn3[0], lmn4[0], tt, rc[0] - rd[0], c, d)
                    for uu in range(lmn3[1] + lmn4[1] + 1):
                        e2u = hermite_e(lmn3[1], lmn4[1], uu, rc[1] - rd[1], c, d)
                        for vv in range(lmn3[2] + lmn4[2] + 1):
                            e2v = hermite_e(lmn3[2], lmn4[2], vv, rc[2] - rd[2], c, d)
                            e2 = e2t * e2u * e2v
                            if e2 == 0.0:
                                continue
                            total += (
                                e1
                                * e2
                                * (-1) ** (tt + uu + vv)
                                * hermite_coulomb(t + tt, u + uu, v + vv, 0, alpha, pq)
                            )
    return total * 2 * math.pi**2.5 / (p * q * math.sqrt(p + q))


class Basis:
    def __init__(self, atoms):
        """atoms: list of (symbol, xyz_bohr)."""
        self.atoms = atoms
        self.functions = []  # each: list of Primitive sharing one center/lmn
        for sym, xyz in atoms:
            z, z1s, z2sp = ELEMENTS[sym]
            self._add_contracted(EXP_1S * z1s**2, D_1S, xyz, (0, 0, 0))
            if z2sp is not None:
                self._add_contracted(EXP_2SP * z2sp**2, D_2S, xyz, (0, 0, 0))
                for lmn in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
                    self._add_contracted(EXP_2SP * z2sp**2, D_2P, xyz, lmn)

    def _add_contracted(self, exps, coeffs, center, lmn):
        prims = [
            Primitive(a, c * primitive_norm(a, lmn), np.asarray(center), lmn)
            for a, c in zip(exps, coeffs)
        ]
        # normalize the contracted function
        s = 0.0
        for pa in prims:
            for pb in prims:
                s += pa.coeff * pb.coeff * overlap_prim(
                    pa.alpha, pa.lmn, pa.center, pb.alpha, pb.lmn, pb.center
                )
        scale = 1.0 / math.sqrt(s)
        for pa in prims:
            pa.coeff *= scale
        self.functions.append(prims)

    def n(self):
        return len(self.functions)


def contracted(op, fa, fb):
    total = 0.0
    for pa in fa:
        for pb in fb:
            total += pa.coeff * pb.coeff * op(pa, pb)
    return total


def build_integrals(basis):
    n = basis.n()
    s = np.zeros((n, n))
    t = np.zeros((n, n))
    v = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1):
            fa, fb = basis.functions[i], basis.functions[j]
            s[i, j] = s[j, i] = contracted(
                lambda pa, pb: overlap_prim(pa.alpha, pa.lmn, pa.center, pb.alpha, pb.lmn, pb.center),
                fa,
                fb,
            )
            t[i, j] = t[j, i] = contracted(
                lambda pa, pb: kinetic_prim(pa.alpha, pa.lmn, pa.center, pb.alpha, pb.lmn, pb.center),
                fa,
                fb,
            )
            vij = 0.0
            for sym, xyz in basis.atoms:
                zc = ELEMENTS[sym][0]
                vij -= zc * contracted(
                    lambda pa, pb, rc=xyz: nuclear_prim(
                        pa.alpha, pa.lmn, pa.center, pb.alpha, pb.lmn, pb.center, rc
                    ),
                    fa,
                    fb,
                )
            v[i, j] = v[j, i] = vij

    eri = np.zeros((n, n, n, n))
    for i in range(n):
        for j in range(i + 1):
            ij = i * (i + 1) // 2 + j
            for k in range(n):
                for l in range(k + 1):
                    kl = k * (k + 1) // 2 + l
                    if ij < kl:
                        continue
                    val = 0.0
                    for pa in basis.functions[i]:
                        for pb in basis.functions[j]:
                            for pc in basis.functions[k]:
                                for pd in basis.functions[l]:
                                    val += (
                                        pa.coeff
                                        * pb.coeff
                                        * pc.coeff
                                        * pd.coeff
                                        * eri_prim(
                                            pa.alpha, pa.lmn, pa.center,
                                            pb.alpha, pb.lmn, pb.center,
                                            pc.alpha, pc.lmn, pc.center,
                                            pd.alpha, pd.lmn, pd.center,
                                        )
                                    )
                    for a, b in ((i, j), (j, i)):
                        for c, d in ((k, l), (l, k)):
                            eri[a, b, c, d] = val
                            eri[c, d, a, b] = val
    return s, t, v, eri


def nuclear_repulsion(atoms):
    e = 0.0
    for i in range(len(atoms)):
        for j in range(i):
            zi = ELEMENTS[atoms[i][0]][0]
            zj = ELEMENTS[atoms[j][0]][0]
            e += zi * zj / float(np.linalg.norm(np.asarray(atoms[i][1]) - np.asarray(atoms[j][1])))
    return e


def rhf(s, t, v, eri, n_elec, e_nuc, max_iter=200, conv=1e-11):
    n = s.shape[0]
    n_occ = n_elec // 2
    hcore = t + v
    w, u = np.linalg.eigh(s)
    x = u @ np.diag(w**-0.5) @ u.T
    # generalized Wolfsberg-Helmholz guess; the bare core guess can land on
    # aufbau-violating SCF solutions for multiply bonded systems
    f = np.zeros_like(s)
    for i in range(n):
        for j in range(n):
            f[i, j] = 0.875 * (hcore[i, i] + hcore[j, j]) * s[i, j]
    np.fill_diagonal(f, np.diag(hcore))
    dm = np.zeros_like(s)
    e_old = 0.0
    focks, errs = [], []
    for it in range(max_iter):
        fp = x.T @ f @ x
        eps, cp = np.linalg.eigh(fp)
        c = x @ cp
        cocc = c[:, :n_occ]
        dm = 2.0 * cocc @ cocc.T
        j = np.einsum("pqrs,rs->pq", eri, dm)
        k = np.einsum("prqs,rs->pq", eri, dm)
        f = hcore + j - 0.5 * k
        e_elec = 0.5 * np.sum(dm * (hcore + f))
        err = f @ dm @ s - s @ dm @ f
        focks.append(f.copy())
        errs.append(err.flatten())
        if len(focks) > 8:
            focks.pop(0)
            errs.pop(0)
        if it > 0 and abs(e_elec - e_old) < conv and np.max(np.abs(err)) < 1e-8:
            return e_elec + e_nuc, eps, c
        e_old = e_elec
        # DIIS extrapolation
        if len(focks) >= 2:
            m = len(focks)
            bmat = -np.ones((m + 1, m + 1))
            bmat[m, m] = 0.0
            for a in range(m):
                for b in range(m):
                    bmat[a, b] = np.dot(errs[a], errs[b])
            rhs = np.zeros(m + 1)
            rhs[m] = -1.0
            try:
                coeffs = np.linalg.solve(bmat, rhs)[:m]
                f = sum(ci * fi for ci, fi in zip(coeffs, focks))
            except np.linalg.LinAlgError:
                pass
    raise RuntimeError("SCF failed to converge")


def mo_integrals(hcore, eri, c):
    h1 = c.T @ hcore @ c
    g = np.einsum("pqrs,pi->iqrs", eri, c, optimize=True)
    g = np.einsum("iqrs,qj->ijrs", g, c, optimize=True)
    g = np.einsum("ijrs,rk->ijks", g, c, optimize=True)
    g = np.einsum("ijks,sl->ijkl", g, c, optimize=True)
    return h1, g


def write_fcidump(path, h1, g, e_nuc, n_elec, tol=1e-13):
    n = h1.shape[0]
    with open(path, "w") as fh:
        fh.write(f"&FCI NORB={n},NELEC={n_elec},MS2=0,\n")
        fh.write("  ORBSYM=" + "1," * n + "\n")
        fh.write("  ISYM=1,\n")
        fh.write("&END\n")
        for i in range(n):
            for j in range(i + 1):
                ij = i * (i + 1) // 2 + j
                for k in range(i + 1):
                    for l in range(k + 1):
                        kl = k * (k + 1) // 2 + l
                        if ij < kl:
                            continue
                        val = g[i, j, k, l]
                        if abs(val) > tol:
                            fh.write(f" {val:.16e} {i+1} {j+1} {k+1} {l+1}\n")
        for i in range(n):
            for j in range(i + 1):
                if abs(h1[i, j]) > tol:
                    fh.write(f" {h1[i,j]:.16e} {i+1} {j+1} 0 0\n")
        fh.write(f" {e_nuc:.16e} 0 0 0 0\n")


def ang(x):
    return x * BOHR_PER_ANGSTROM


def molecules():
    mols = {}
    mols["h2"] = [("H", (0.0, 0.0, 0.0)), ("H", (0.0, 0.0, ang(0.735)))]
    mols["lih"] = [("Li", (0.0, 0.0, 0.0)), ("H", (0.0, 0.0, ang(1.5949)))]
    mols["hf"] = [("F", (0.0, 0.0, 0.0)), ("H", (0.0, 0.0, ang(0.9168)))]
    mols["beh2"] = [
        ("Be", (0.0, 0.0, 0.0)),
        ("H", (0.0, 0.0, ang(1.3264))),
        ("H", (0.0, 0.0, -ang(1.3264))),
    ]
    # r(OH) = 0.9572 A, HOH angle 104.52 deg
    th = math.radians(104.52 / 2)
    r = ang(0.9572)
    mols["h2o"] = [
        ("O", (0.0, 0.0, 0.0)),
        ("H", (0.0, r * math.sin(th), r * math.cos(th))),
        ("H", (0.0, -r * math.sin(th), r * math.cos(th))),
    ]
    # r(NH) = 1.0116 A, HNH angle 106.67 deg (C3v)
    rnh = ang(1.0116)
    hnh = math.radians(106.67)
    # place H atoms on a cone around z: polar angle from the C3 axis
    sphi = math.sin(hnh / 2) / math.sin(math.radians(60))
    pol = math.asin(sphi)
    mols["nh3"] = [("N", (0.0, 0.0, 0.0))] + [
        (
            "H",
            (
                rnh * math.sin(pol) * math.cos(2 * math.pi * k / 3),
                rnh * math.sin(pol) * math.sin(2 * math.pi * k / 3),
                rnh * math.cos(pol),
            ),
        )
        for k in range(3)
    ]
    # tetrahedral CH4, bond length scaled so V_NN = 13.408333940 Ha
    ch4 = [("C", (0.0, 0.0, 0.0))] + [
        ("H", (sx * 1.0, sy * 1.0, sx * sy * 1.0)) for sx in (1, -1) for sy in (1, -1)
    ]
    mols["ch4"] = rescale_to_vnn(ch4, 13.408333940368452)
    mols["n2"] = [("N", (0.0, 0.0, 0.0)), ("N", (0.0, 0.0, ang(1.0977)))]
    mols["co"] = [("C", (0.0, 0.0, 0.0)), ("O", (0.0, 0.0, ang(1.1283)))]
    # C3v fluoromethane: experimental geometry uniformly scaled so that
    # V_NN = 37.830618998 Ha
    rcf = ang(1.383)
    rch = ang(1.087)
    hcf = math.radians(108.8)
    ch3f = [
        ("C", (0.0, 0.0, 0.0)),
        ("F", (0.0, 0.0, rcf)),
    ] + [
        (
            "H",
            (
                rch * math.sin(hcf) * math.cos(2 * math.pi * k / 3),
                rch * math.sin(hcf) * math.sin(2 * math.pi * k / 3),
                rch * math.cos(hcf),
            ),
        )
        for k in range(3)
    ]
    mols["ch3f"] = rescale_to_vnn(ch3f, 37.83061899847712)
    return mols


def rescale_to_vnn(atoms, target):
    scale = nuclear_repulsion(atoms) / target
    return [(sym, tuple(scale * x for x in xyz)) for sym, xyz in atoms]


def main():
    outdir = os.path.join(os.path.dirname(__file__), "..", "testdata")
    os.makedirs(outdir, exist_ok=True)
    reference = {}
    for name, atoms in molecules().items():
        n_elec = sum(ELEMENTS[sym][0] for sym, _ in atoms)
        basis = Basis(atoms)
        e_nuc = nuclear_repulsion(atoms)
        s, t, v, eri = build_integrals(basis)
        e_hf, eps, c = rhf(s, t, v, eri, n_elec, e_nuc)
        h1, g = mo_integrals(t + v, eri, c)
        path = os.path.join(outdir, f"{name}.fcidump")
        write_fcidump(path, h1, g, e_nuc, n_elec)
        reference[name] = {
            "n_spatial": basis.n(),
            "n_electrons": n_elec,
            "e_nuc": e_nuc,
            "e_hf": e_hf,
        }
        print(f"{name:6s} norb={basis.n():3d} nelec={n_elec:3d} "
              f"V_NN={e_nuc:.12f} E_HF={e_hf:.10f}")
    with open(os.path.join(outdir, "reference.json"), "w") as fh:
        json.dump(reference, fh, indent=2, sort_keys=True)


if __name__ == "__main__":
    main()
