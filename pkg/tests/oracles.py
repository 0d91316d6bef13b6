"""Frozen reference values computed by a separate symbolic script that does
not import the package.  Keys are exponents of x = q^(1/4); values are
(real, imaginary) coefficient pairs."""
from fractions import Fraction

from spinnet.qarith import GaussRat, QLaurent, QRatio


def lp(terms: dict) -> QLaurent:
    return QLaurent.from_terms(
        {e: GaussRat(Fraction(re), Fraction(im)) for e, (re, im) in terms.items()}
    )


def rat(pair) -> QRatio:
    num, den = pair
    return QRatio.of(lp(num)) / QRatio.of(lp(den))


QFACT_3 = {-12: ("1", "0"), -4: ("2", "0"), 4: ("2", "0"), 12: ("1", "0")}
QBINOM_4_2 = {-16: ("1", "0"), -8: ("1", "0"), 0: ("2", "0"), 8: ("1", "0"), 16: ("1", "0")}
QINT4_OVER_QINT2 = ({0: ("1", "0"), 16: ("1", "0")}, {8: ("1", "0")})

# C^{1,1,1}_{0,1,1}, P^{1,1,1}_{0,1,1}, W^{1,1,1}_{0,1,-1}, W^{1/2,1/2,1}_{1/2,1/2,-1}
CG_111_011 = ({0: ("0", "-1")}, {4: ("1", "0")})
PROJ_111_011 = ({0: ("0", "-1")}, {0: ("1", "0"), 8: ("1", "0")})
W_111_01M1 = {-4: ("0", "1"), 4: ("0", "1")}
W_HH1_HH_M1 = {4: ("-1", "0")}

# R-matrix entries: (a, b, u, v, h, k) in plain (not doubled) spins
RMAT_HH_HH_HH = {2: ("1", "0")}
RMAT_HH_MH_H_MH_H = {-6: ("-1", "0"), 2: ("1", "0")}
RMAT_HH_MH_H_H_MH = {-2: ("1", "0")}
RMAT_11_M1_1_0_0 = {-12: ("-1", "0"), 4: ("1", "0")}

TET_111111 = {
    -40: ("1", "0"), -32: ("4", "0"), -24: ("8", "0"), -16: ("12", "0"), -8: ("15", "0"),
    0: ("16", "0"), 8: ("15", "0"), 16: ("12", "0"), 24: ("8", "0"), 32: ("4", "0"), 40: ("1", "0"),
}
TET_110110 = {-8: ("1", "0"), 0: ("1", "0"), 8: ("1", "0")}
THETA_RAW_111 = (
    {0: ("-1", "0"), 8: ("-1", "0"), 16: ("-2", "0"), 24: ("-1", "0"), 32: ("-1", "0")},
    {12: ("1", "0"), 20: ("1", "0")},
)
