from algebra.poly import IntPoly, Poly, RatPoly, poly_discriminant, resultant
from algebra.matrix import Mat2Q
from algebra.binary_form import (
    BinaryForm,
    dehomogenize,
    discriminant,
    form_product,
    homogenize,
    proportionality,
    substitute,
)
from algebra.roots import ProjRoot, projective_roots

__all__ = [
    "BinaryForm",
    "IntPoly",
    "Mat2Q",
    "Poly",
    "ProjRoot",
    "RatPoly",
    "dehomogenize",
    "discriminant",
    "form_product",
    "homogenize",
    "poly_discriminant",
    "projective_roots",
    "proportionality",
    "resultant",
    "substitute",
]
