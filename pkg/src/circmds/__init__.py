"""Reduced submatrix sets for MDS verification of circulant matrices."""

from .census import (CensusReport, census, reduced_count_prime, reduced_count_upper,
                     sandwich_check, total_square_submatrices)
from .circulant import (CirculantSpec, DenseMatrix, SubmatrixIndex, Variant,
                        anti_transpose_index, determinant, extract, orbit,
                        shift_submatrix, transpose_index)
from .gf2m import FieldElement, FieldError, FieldSpec
from .necklace import (canonical_rotation, compositions, necklaces,
                       rows_from_composition, subsets)
from .reducer import (Certificate, ReducedSet, build_reduced_set,
                      membership_certificate, row_orbit_tuples)
from .verifier import Verdict, first_witness, is_mds_bruteforce, is_mds_reduced

__version__ = "0.1.0"
