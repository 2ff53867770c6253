"""
Syntax and syntactic algebra tests.
"""
