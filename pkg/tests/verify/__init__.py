"""
Harness, sieve, demo and CLI tests.
"""
