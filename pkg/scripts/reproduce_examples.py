#!/usr/bin/env python3
"""Walk through every worked numeric example and print the results as tables.

Covers: the base 4-agent Laplacian and its relabeling conjugates, the full
deduped relabeling family, the dense two-parameter family (spectra, modal
matrices, validity map), the shared-Fiedler null-space check, a mirror move
with its rebuilt Laplacian, a path integral of the connectivity differential,
and an equal-connectivity zone scan.

Usage: python scripts/reproduce_examples.py
"""

import numpy as np

from isoconn import (
    Agent,
    AgentConfiguration,
    SquareMatrix,
    algebraic_connectivity,
    build_laplacian,
    dense_family_laplacian,
    dense_family_spectrum,
    dense_family_validity,
    fiedler_null_space_check,
    integrate_connectivity_change,
    iso_connectivity_zone,
    GridSpec,
    mirror_moves,
    permutation_family,
    permutation_matrix,
    similarity_transform,
    symmetric_eigendecomposition,
)

L1 = SquareMatrix.from_rows(
    [[3, -1, -1, -1], [-1, 2, -1, 0], [-1, -1, 3, -1], [-1, 0, -1, 2]]
)


def show(title, matrix):
    print(f"\n{title}:")
    for row in np.asarray(matrix):
        print("   [" + "  ".join(f"{x:8.4f}" for x in row) + "]")


def main():
    print("=" * 72)
    print("Relabeling conjugates of the base 4-agent Laplacian")
    print("=" * 72)
    show("base Laplacian", L1.entries)
    for name, perm in (("full reversal", (3, 2, 1, 0)), ("middle swap", (0, 2, 1, 3))):
        entry = similarity_transform(L1, permutation_matrix(perm))
        show(f"conjugate under {name} {perm}", entry.result.entries)
    spectrum = symmetric_eigendecomposition(L1).eigenvalues
    print("\nshared spectrum:", np.round(spectrum, 4))

    family = permutation_family(L1, dedupe=True)
    print(f"\ndeduped relabeling family: {len(family)} distinct matrices")
    for i, entry in enumerate(family):
        print(f"  member {i}: perm={entry.perm} distinct_from_base={entry.distinct_from_base}")

    print("\n" + "=" * 72)
    print("Dense two-parameter family")
    print("=" * 72)
    for alpha, beta in ((2.0, 3.0), (3.0, 4.0)):
        lap = dense_family_laplacian(alpha, beta)
        show(f"family member at ({alpha:g}, {beta:g})", lap.entries)
        decomp = symmetric_eigendecomposition(lap)
        print("  eigenvalues (numeric):   ", np.round(decomp.eigenvalues, 4))
        print("  eigenvalues (closed form):", np.round(dense_family_spectrum(alpha, beta), 4))
        show("  modal matrix", decomp.eigenvectors)
    check = fiedler_null_space_check(
        dense_family_laplacian(2.0, 3.0), dense_family_laplacian(3.0, 4.0)
    )
    print(
        f"\nshared-Fiedler null-space check: ok={check.ok} "
        f"residual={check.residual:.2e} levels=({check.lambda2_base:g}, {check.lambda2_other:g})"
    )
    print("\nvalidity map (+: level pinned at 4, o: inequality true but level moved, .: invalid)")
    values = np.linspace(0.25, 5.0, 20)
    for beta in reversed(values):
        row = ""
        for alpha in values:
            c = dense_family_validity(float(alpha), float(beta))
            row += "o" if c.discrepancy else ("+" if c.inequality_holds else ".")
        print("   " + row)

    print("\n" + "=" * 72)
    print("Mirror move and connectivity bookkeeping")
    print("=" * 72)
    # A far-away bystander keeps agent a3 on exactly two in-range neighbors.
    with_bystander = AgentConfiguration(
        (
            Agent("a1", 0.0, 0.0),
            Agent("a2", 4.0, 0.0),
            Agent("a3", 1.0, 2.0),
            Agent("a4", 40.0, 40.0),
        ),
        sigma=1.0,
        comm_range=10.0,
    )
    solution = mirror_moves(with_bystander, 2)
    print("mobile agent a3 at", solution.original, "-> alternatives", solution.alternatives)
    base = build_laplacian(with_bystander)
    moved = build_laplacian(with_bystander.with_position(2, *solution.alternatives[0]))
    print("max Laplacian change at the mirror point:", np.abs(moved.entries - base.entries).max())

    # The connected three-agent core carries the spectral bookkeeping.
    config = AgentConfiguration(with_bystander.agents[:3], sigma=1.0, comm_range=10.0)
    report = algebraic_connectivity(build_laplacian(config))
    print("connectivity level:", round(report.lambda2, 6), "fiedler:", np.round(report.fiedler, 4))

    result = integrate_connectivity_change(
        config, 2, [(1.0, 2.0), (1.5, 2.5), (2.0, 2.0)], 2000
    )
    print(
        f"path integral: {result.integral:+.6f}  direct difference: {result.direct:+.6f}  "
        f"warnings: {list(result.warnings)}"
    )

    # Grid with cell centers on the original position and its mirror twin.
    sample = iso_connectivity_zone(config, 2, GridSpec(0.0, 2.0, -3.0, 3.0, 1, 3), tol=1e-9)
    print(
        f"zone scan: target={sample.target:.6f} accepted={len(sample.accepted)} "
        f"rejected={sample.rejected_count}"
    )
    for p in sample.accepted:
        print(f"   accepted cell ({p.x:.3f}, {p.y:.3f}) level={p.lambda2:.9f}")


if __name__ == "__main__":
    main()
