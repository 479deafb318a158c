"""
Registry spec strings: name[:key=value,...]

A ',' may stand for the ':' after the name. Values are sympy expressions
evaluated to numbers ('pi/2', '-3', '1e-3') or bare identifiers. A 'bundle'
parameter takes the rest of the string as a nested spec, so

    chern:k=1,bundle=monopole:n=2

is the first Chern character of the charge 2 monopole.
"""
import re

import sympy
from sympy.parsing.sympy_parser import parse_expr

from helpers import error, tf_cfg

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'

NAME_RE = re.compile(r'[A-Za-z][A-Za-z0-9_\-]*')
KEY_RE = re.compile(r'[A-Za-z][A-Za-z0-9_]*$')
IDENT_RE = re.compile(r'[A-Za-z][A-Za-z0-9_\-]*$')
NESTED = ('bundle',)

_LOCALS = {'pi': sympy.pi, 'e': sympy.E, 'E': sympy.E, 'I': sympy.I}


class Spec(object):
    """Parsed registry reference."""

    def __init__(self, name, params=None, text=''):
        self.name = name
        self.params = dict(params or {})
        self.text = text or name

    def get(self, key, default=None):
        return self.params.get(key, default)

    def number(self, key, default=None):
        value = self.params.get(key, default)
        if isinstance(value, (str, Spec)):
            raise error.SpecError('parameter %s=%s is not a number'
                                  % (key, value), self.text,
                                  self.text.find(key + '='))
        return value

    def integer(self, key, default=None):
        value = self.number(key, default)
        if value is None:
            return None
        if float(value) != int(round(float(value))):
            raise error.SpecError('parameter %s=%s is not an integer'
                                  % (key, value), self.text,
                                  self.text.find(key + '='))
        return int(round(float(value)))

    def identifier(self, key, default=None):
        value = self.params.get(key, default)
        if value is not None and not isinstance(value, str):
            raise error.SpecError('parameter %s=%s is not a name' % (key, value),
                                  self.text, self.text.find(key + '='))
        return value

    def nested(self, key):
        value = self.params.get(key)
        if value is None:
            raise error.SpecError('missing %s= parameter' % key, self.text,
                                  len(self.text))
        return value

    def check_keys(self, allowed):
        for key in self.params:
            if key not in allowed:
                raise error.SpecError('unknown parameter %r for %s'
                                      % (key, self.name), self.text,
                                      self.text.find(key + '='))

    def __repr__(self):
        return 'Spec(%s, %r)' % (self.name, self.params)


def parse_value(raw, text, position):
    raw = raw.strip()
    if not raw:
        raise error.SpecError('empty value', text, position)
    if IDENT_RE.match(raw) and raw not in _LOCALS:
        return raw
    try:
        expr = parse_expr(raw, local_dict=dict(_LOCALS))
    except Exception:
        raise error.SpecError('cannot parse value %r' % raw, text, position)
    if expr.free_symbols:
        raise error.SpecError('value %r has free symbols' % raw, text, position)
    value = complex(sympy.N(expr, 17))
    if abs(value.imag) > 1e-15:
        raise error.SpecError('value %r is not real' % raw, text, position)
    if expr.is_integer:
        return int(expr)
    return value.real


def parse(text, origin=None, offset=0):
    """Spec from a string; positions in errors refer to 'origin'."""
    origin = text if origin is None else origin
    m = NAME_RE.match(text)
    if not m:
        raise error.SpecError('expected a registry name', origin, offset)
    name = m.group(0)
    pos = m.end()
    params = {}
    if pos < len(text):
        if text[pos] not in ':,':
            raise error.SpecError("expected ':' after %r" % name, origin,
                                  offset + pos)
        pos += 1
        if pos == len(text):
            raise error.SpecError('expected key=value', origin, offset + pos)
    while pos < len(text):
        eq = text.find('=', pos)
        if eq < 0:
            raise error.SpecError('expected key=value', origin, offset + pos)
        key = text[pos:eq].strip()
        if not KEY_RE.match(key):
            raise error.SpecError('bad parameter name %r' % key, origin,
                                  offset + pos)
        if key in params:
            raise error.SpecError('duplicate parameter %r' % key, origin,
                                  offset + pos)
        if key in NESTED:
            params[key] = parse(text[eq + 1:], origin, offset + eq + 1)
            break
        end = text.find(',', eq + 1)
        if end < 0:
            end = len(text)
        params[key] = parse_value(text[eq + 1:end], origin, offset + eq + 1)
        if end == len(text) - 1:
            raise error.SpecError('trailing comma', origin, offset + end)
        pos = end + 1
    tf_cfg.dbg(4, "\tParsed %s -> %s %s" % (text, name, params))
    return Spec(name, params, text)


def parse_assignment(text):
    """key=value of a --set option."""
    eq = text.find('=')
    if eq <= 0:
        raise error.SpecError('expected key=value', text, 0)
    key = text[:eq].strip()
    if not KEY_RE.match(key):
        raise error.SpecError('bad parameter name %r' % key, text, 0)
    return key, parse_value(text[eq + 1:], text, eq + 1)

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
