"""Small triangulated spaces with known cohomology."""

from bredon.scomplex import from_maximal_faces


def circle():
    return from_maximal_faces([1, 2, 3], [(1, 2), (2, 3), (1, 3)])


def sphere():
    return from_maximal_faces([1, 2, 3, 4], [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])


def projective_plane():
    tris = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
            (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)]
    return from_maximal_faces(range(1, 7), tris)


def _grid(n, twist):
    def v(i, j):
        if i == n:
            i, j = 0, (-j if twist else j)
        return (i % n, j % n)

    tris = []
    for i in range(n):
        for j in range(n):
            a, b, c, d = v(i, j), v(i + 1, j), v(i + 1, j + 1), v(i, j + 1)
            tris += [(a, b, c), (a, c, d)]
    verts = sorted({x for t in tris for x in t})
    return from_maximal_faces(verts, tris)


def torus():
    return _grid(4, twist=False)


def klein_bottle():
    return _grid(4, twist=True)
