# Walk through the reference-element data every scheme in this package is
# built from: solution points, quadrature weights, the differentiation
# matrix, and the correction-derivative vectors.
import numpy as np

from fr1d import CorrectionKind, NodeKind, build_basis

np.set_printoptions(precision=6, suppress=True)

for kind, correction in ((NodeKind.GAUSS_LEGENDRE, CorrectionKind.RADAU),
                         (NodeKind.GAUSS_LOBATTO_LEGENDRE, CorrectionKind.G2)):
    print(f"=== {kind.value} points with {correction.value} correction ===")
    for degree in (1, 2, 3):
        b = build_basis(kind, degree, correction)
        print(f"degree {degree}")
        print("  nodes   ", b.nodes)
        print("  weights ", b.weights, " (sum = %.17f)" % b.weights.sum())

        # The weights integrate polynomials exactly up to 2N+1 (GL) or
        # 2N-1 (GLL); check the edge monomial.
        m = 2 * degree + 1 if kind is NodeKind.GAUSS_LEGENDRE else 2 * degree - 1
        err = abs(b.weights @ b.nodes**m - 1 / (m + 1))
        print(f"  quadrature error at degree {m}: {err:.2e}")

        # Differentiating the nodal values of x**degree reproduces the
        # exact derivative values.
        deriv = b.diff_matrix @ b.nodes**degree
        exact = degree * b.nodes ** (degree - 1) if degree > 0 else 0 * b.nodes
        print(f"  differentiation error: {np.max(np.abs(deriv - exact)):.2e}")

        # The correction-derivative vectors are boundary interpolants
        # scaled by the weights; they effect the interface lift in the
        # update without ever building the correction polynomials.
        print("  g_R' at nodes:", b.corr_deriv_right)
        print("  g_L' at nodes:", b.corr_deriv_left)
    print()
