"""Shared exception types."""


class SizeCapExceeded(Exception):
    """An operation was asked to exceed its configured size cap."""


class FormulaNotApplicable(Exception):
    """A closed-form prediction was requested outside its hypotheses."""
