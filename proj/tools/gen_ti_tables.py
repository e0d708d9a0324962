#!/usr/bin/env python3
"""Regenerates include/tutte/ti_data.hpp.

The truncated icosahedron is built by truncating an icosahedron whose pole
vertex sits on the z-axis, so one pentagon is centred at the top.  Vertices
are numbered ring by ring from the top pentagon downwards, each ring in
counter-clockwise angular order.  The dual (pentakis dodecahedron) is
numbered the same way using face centres.
"""
import itertools
import math
import sys

PHI = (1 + 5 ** 0.5) / 2


def icosahedron():
    pts = []
    for a, b in itertools.product((-1, 1), repeat=2):
        pts += [(0, a, b * PHI), (a, b * PHI, 0), (b * PHI, 0, a)]
    # Rotate so (0, 1, PHI) lies on +z.
    top = (0, 1, PHI)
    ang = math.atan2(top[1], top[2])
    rot = []
    for x, y, z in pts:
        c, s = math.cos(ang), math.sin(ang)
        rot.append((x, c * y - s * z, s * y + c * z))
    edges = [(i, j) for i, j in itertools.combinations(range(12), 2)
             if abs(dist(rot[i], rot[j]) - 2) < 1e-9]
    faces = [f for f in itertools.combinations(range(12), 3)
             if all(abs(dist(rot[a], rot[b]) - 2) < 1e-9
                    for a, b in itertools.combinations(f, 2))]
    return rot, edges, faces


def dist(p, q):
    return math.sqrt(sum((a - b) ** 2 for a, b in zip(p, q)))


def ring_order(points):
    """Indices sorted by descending height, then angle within a ring."""
    zs = sorted({round(p[2], 6) for p in points}, reverse=True)
    order = []
    start = None
    for z in zs:
        ring = [i for i, p in enumerate(points) if round(p[2], 6) == z]
        angles = {i: math.atan2(points[i][1], points[i][0]) for i in ring}
        if start is None:
            start = min(angles.values())
        ring.sort(key=lambda i: (angles[i] - start + 1e-9) % (2 * math.pi))
        order += ring
    return order


def relabel(points, edges):
    order = ring_order(points)
    label = {old: new + 1 for new, old in enumerate(order)}
    out = sorted(tuple(sorted((label[a], label[b]))) for a, b in edges)
    return len(points), out


def truncated_icosahedron():
    ico, ico_edges, ico_faces = icosahedron()
    darts = [(a, b) for a, b in ico_edges] + [(b, a) for a, b in ico_edges]
    idx = {d: i for i, d in enumerate(darts)}
    pts = [tuple((2 * ico[a][k] + ico[b][k]) / 3 for k in range(3))
           for a, b in darts]
    edges = set()
    for a, b in ico_edges:
        edges.add((idx[(a, b)], idx[(b, a)]))
    for i, j in itertools.combinations(range(len(darts)), 2):
        (a, b), (c, d) = darts[i], darts[j]
        if a == c and (b, d) in {tuple(sorted(e)) for e in ico_edges} | \
                {tuple(sorted(e))[::-1] for e in ico_edges}:
            edges.add((i, j))
    # Faces of the truncation: one pentagon per icosahedron vertex, one
    # hexagon per icosahedron face.
    faces = [frozenset(idx[d] for d in darts if d[0] == v) for v in range(12)]
    for f in ico_faces:
        faces.append(frozenset(idx[(a, b)] for a in f for b in f if a != b))
    centres = []
    for f in faces:
        c = [sum(pts[i][k] for i in f) / len(f) for k in range(3)]
        centres.append(tuple(c))
    dual_edges = [(p, q) for p, q in itertools.combinations(range(len(faces)), 2)
                  if any(a in faces[p] and b in faces[p] and a in faces[q] and b in faces[q]
                         for a, b in edges)]
    return relabel(pts, edges), relabel(centres, dual_edges)


def emit(name, graph):
    n, edges = graph
    lines = [f"inline constexpr std::array<std::pair<int, int>, {len(edges)}> {name}{{{{"]
    row = []
    for k, (a, b) in enumerate(edges):
        row.append(f"{{{a}, {b}}}")
        if len(row) == 8 or k == len(edges) - 1:
            lines.append("    " + ", ".join(row) + ",")
            row = []
    lines.append("}};")
    return n, "\n".join(lines)


def main():
    ti, dual = truncated_icosahedron()
    assert ti[0] == 60 and len(ti[1]) == 90
    assert dual[0] == 32 and len(dual[1]) == 90
    n1, t1 = emit("kTruncatedIcosahedronEdges", ti)
    n2, t2 = emit("kTruncatedIcosahedronDualEdges", dual)
    out = f"""// Generated by tools/gen_ti_tables.py; do not edit by hand.
#pragma once

#include <array>
#include <utility>

namespace tutte::data {{

// Vertices numbered in concentric rings around a pentagon.
inline constexpr int kTruncatedIcosahedronVertices = {n1};
{t1}

// Dual graph: one vertex per face, numbered in concentric rings around the
// top pentagon's face.
inline constexpr int kTruncatedIcosahedronDualVertices = {n2};
{t2}

}}  // namespace tutte::data
"""
    path = sys.argv[1] if len(sys.argv) > 1 else "include/tutte/ti_data.hpp"
    with open(path, "w") as fh:
        fh.write(out)


if __name__ == "__main__":
    main()
