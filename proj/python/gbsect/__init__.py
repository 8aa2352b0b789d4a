from ._core import normal_form, planes, reduced_basis, run

__all__ = ["normal_form", "planes", "reduced_basis", "run"]
