"""Combinatorics of finite median graphs, their cone-offs, and small-cancellation checks.

Subpackages by task:

- ``cubekit.median``       median graphs, hyperplanes, cubes, convexity, projections
- ``cubekit.diagnostics``  grids, flat rectangles, hyperbolicity constants, cone-offs
- ``cubekit.racg``         right-angled Coxeter groups: normal forms, balls, join decompositions
- ``cubekit.smallcancel``  symmetrized families and C'(lambda)/T(q) checks
- ``cubekit.polygonal``    even polygonal complexes, walls, dual cube complexes
- ``cubekit.formats``      the text file formats shared by the library and the CLI
- ``cubekit.cli``          the ``cubekit`` command line tool
"""

__version__ = "0.1.0"
