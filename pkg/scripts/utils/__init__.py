"""
ZKScout - Utility Modules
"""
