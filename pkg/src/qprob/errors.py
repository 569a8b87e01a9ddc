"""Exception and warning types shared across the package."""


class DomainError(ValueError):
    """A mathematical precondition was violated.

    Raised for unphysical probability triples, inadmissible shifts,
    out-of-range angles, malformed matrices, and similar input problems.
    """


class FormulaMismatchWarning(UserWarning):
    """A closed-form component expression disagreed with its probe-based construction."""


class NonInvertibleEncodingWarning(UserWarning):
    """The probability encoding carries no trace information.

    Emitted when an observable proportional to the identity is decoded: every
    admissible shift maps such a matrix to the maximally mixed state, so only
    the zero-trace representative can be returned.
    """
