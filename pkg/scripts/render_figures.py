#!/usr/bin/env python3
"""Render the illustrative SVG figures into an output directory.

Emits:
  relabeled_topologies_{a,b,c}.svg  three isospectral relabelings of one graph
  mirror_move_{before,after}.svg    a mobile agent and its reflected twin
  dense_zone_{a,b}.svg              dense 4-agent layouts with the center agent
                                    equidistant from every other one

Usage: python scripts/render_figures.py [outdir]
"""

import math
import pathlib
import sys

from isoconn import (
    Agent,
    AgentConfiguration,
    SquareMatrix,
    permutation_matrix,
    render_configuration_svg,
    render_matrix_svg,
    similarity_transform,
)

L1 = SquareMatrix.from_rows(
    [[3, -1, -1, -1], [-1, 2, -1, 0], [-1, -1, 3, -1], [-1, 0, -1, 2]]
)


def mirror_configs():
    before = AgentConfiguration(
        (
            Agent("1", 0.0, 4.0),
            Agent("2", 0.0, 0.0),
            Agent("3", 4.0, 0.0),
            Agent("4", 1.0, 2.5),
        ),
        sigma=1.0,
        comm_range=6.0,
    )
    # Reflect agent 4 across the 2-3 line (the x axis): distances to both of
    # its neighbors are preserved, so the graph is unchanged.
    after = before.with_position(3, 1.0, -2.5)
    return before, after


def dense_configs():
    # Center agent 3 equidistant from agents 1, 2 and either placement of 4.
    radius = 2.0

    def ring(angle_deg):
        a = math.radians(angle_deg)
        return radius * math.cos(a), radius * math.sin(a)

    variants = []
    for tag, angle4 in (("a", 330.0), ("b", 270.0)):
        agents = (
            Agent("1", *ring(90.0)),
            Agent("2", *ring(210.0)),
            Agent("3", 0.0, 0.0),
            Agent("4", *ring(angle4)),
        )
        variants.append((tag, AgentConfiguration(agents, sigma=1.0, comm_range=6.0)))
    return variants


def main(argv):
    outdir = pathlib.Path(argv[1]) if len(argv) > 1 else pathlib.Path("figures")
    outdir.mkdir(parents=True, exist_ok=True)

    for tag, perm in (("a", None), ("b", (3, 2, 1, 0)), ("c", (0, 2, 1, 3))):
        matrix = L1 if perm is None else similarity_transform(L1, permutation_matrix(perm)).result
        (outdir / f"relabeled_topologies_{tag}.svg").write_text(render_matrix_svg(matrix))

    before, after = mirror_configs()
    (outdir / "mirror_move_before.svg").write_text(render_configuration_svg(before))
    (outdir / "mirror_move_after.svg").write_text(render_configuration_svg(after))

    for tag, config in dense_configs():
        (outdir / f"dense_zone_{tag}.svg").write_text(render_configuration_svg(config))

    print(f"wrote {len(list(outdir.glob('*.svg')))} SVG files to {outdir}/")


if __name__ == "__main__":
    main(sys.argv)
