"""
ZKScout - Certificate Modules

Each module turns a verdict into checkable data:
decomposition  elliptic K as a join of a simplex and simplex boundaries
witness        hyperbolic K as a wedge of two odd spheres retracting off Z_K
"""
