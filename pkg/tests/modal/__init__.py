"""
Modal operator and builder tests.
"""
