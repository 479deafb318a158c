import sys # for sys.exc_info

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2017-2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'

class Error(Exception):
    """Base exception class for chernforge errors.

    Python unittest treats AssertionError as test failure rather than the error.
    Separate exception class is needed to tell a broken computation (bad
    arguments, inconsistent geometry) from a check that computed a wrong value.
    """
    pass

class ArgumentError(Error):
    """Operation called outside of its domain: bad index, bad range."""
    pass

class DomainError(Error):
    """Objects live on different chart domains or bases."""
    pass

class DegreeError(Error):
    """Form degree does not fit the operation or the cycle dimension."""
    pass

class GaugeError(Error):
    """Gauge data is inconsistent or does not cover the requested region."""
    pass

class TrivializationError(Error):
    """Cycle has no frame of the pulled back bundle."""
    pass

class IntegralityError(Error):
    """Period of a characteristic form is too far from an integer."""

    def __init__(self, msg, cycle=None, period=None):
        Error.__init__(self, msg)
        self.cycle = cycle
        self.period = period

class SpecError(Error):
    """Scenario, bundle, cycle or character description cannot be parsed."""

    def __init__(self, msg, text='', position=None):
        if position is not None:
            msg = "%s at position %d in '%s'" % (msg, position, text)
        Error.__init__(self, msg)
        self.text = text
        self.position = position

def assertTrue(expression, msg=''):
    """Raise framework error if 'expression' is false."""
    if not expression:
        raise Error(msg)

def bug(msg=''):
    """Raise framework error, keep the exception being handled as the cause."""
    exc_info = sys.exc_info()
    if exc_info[1] is not None:
        msg += " (%s: %s)" % (exc_info[0].__name__, exc_info[1])
        raise Error(msg).with_traceback(exc_info[2]) from exc_info[1]
    raise Error(msg)

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
