class InputError(ValueError):
    """Raised for malformed or out-of-range inputs (CLI exit code 2)."""
