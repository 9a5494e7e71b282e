"""
ZKScout - Simplicial Complex Modules

simplicial  finite simplicial complexes stored by their facets
nonface     minimal non-faces and the elliptic/hyperbolic verdict
census      every labeled complex on a small vertex set
"""
