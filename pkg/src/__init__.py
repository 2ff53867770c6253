"""
Submodel Lab - submodel and extension modalities over finite first-order models.
"""
__version__ = "1.0.0"
