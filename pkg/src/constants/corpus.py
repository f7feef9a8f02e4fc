"""
Smooth test corpus used by the verification suites
"""

# Every member is C-infinity on CORPUS_DOMAIN
CORPUS_DOMAIN = (0.5, 2.5)

# Minimum width of a random corpus interval
CORPUS_MIN_WIDTH = 0.05

SMOOTH_CORPUS = [
    'exp(t)',
    'exp(-t)',
    'exp(2*t)',
    'exp(-(t^2))',
    'sin(t)',
    'cos(t)',
    'sin(2*t)',
    'cos(3*t)',
    'log(t)',
    'sqrt(t)',
    '1/t',
    '1/(1 + t^2)',
    't^4',
    't^5',
    't^6',
    't^3 - 2*t^2 + t',
    'sinh(t)',
    'cosh(t)',
    'tanh(t)',
    'coth(t)',
    'coth(t)/t',
    't*exp(t)',
    't*log(t)',
    'exp(sin(t))',
    'sin(t)/t',
    'log(1 + t^2)',
    'sqrt(1 + t^2)',
    't^2.5',
    't^-1.5',
    'exp(t)*cos(t)',
    'exp(-t)*sin(3*t)',
    '1/(2 + sin(t))',
    'cosh(t)^2',
    'tanh(t)^2',
    'log(cosh(t))',
    't*sinh(t)',
    'exp(t/2)/t',
    'sqrt(t)*exp(-t)',
    'sin(t)^2',
    'cos(t)^3',
    '(1 + t)^-2',
    't^2*log(t)',
    'exp(cos(t))',
    'tan(t/4)',
    '1/sqrt(1 + t)',
    'log(2 + cos(t))',
    'sinh(t)/t',
    't^3*exp(-t)',
    'cosh(t/2)*sin(t)',
    'exp(-1/t)',
]

# Members whose derivatives of orders 1..4 are monotone on CORPUS_DOMAIN, so their
# extrema over any sub-interval are the endpoint values
MONOTONE_CORPUS = [
    'exp(t)',
    'exp(-t)',
    'exp(2*t)',
    'log(t)',
    'sqrt(t)',
    '1/t',
    't^4',
    't^5',
    't^6',
    'sinh(t)',
    'cosh(t)',
    't*exp(t)',
    't^2.5',
    't^-1.5',
    '(1 + t)^-2',
    '1/sqrt(1 + t)',
]
