# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
exceptions raised by the package, the command line maps them to exit code 2
"""


class KnotCohomologyError(Exception):
    pass


class InvalidInputError(KnotCohomologyError, ValueError):
    pass


class RepresentationError(KnotCohomologyError, ValueError):
    pass


class ComplexError(KnotCohomologyError):
    def __init__(self, message, degree=None):
        super(ComplexError, self).__init__(message)
        self.degree = degree


class InconsistentSequenceError(KnotCohomologyError):
    def __init__(self, message, degree=None):
        super(InconsistentSequenceError, self).__init__(message)
        self.degree = degree


class AmbiguityError(KnotCohomologyError):
    def __init__(self, message, coordinates=None):
        super(AmbiguityError, self).__init__(message)
        self.coordinates = coordinates


class MissingInputError(KnotCohomologyError):
    def __init__(self, message, block=None):
        super(MissingInputError, self).__init__(message)
        self.block = block
