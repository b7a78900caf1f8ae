# *****************************************************************************
# Quantum Network Conferencing-Key Estimator
# Copyright (C) 2024 qnet_estimator contributors
#
# This file is part of qnet_estimator
#
# qnet_estimator is free software: you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation, either version 3 of the License, or (at your option) any
# later version.
#
# qnet_estimator is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS
# FOR A PARTICULAR PURPOSE. See the GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License along with
# qnet_estimator. If not, see <https://www.gnu.org/licenses/>.
# *****************************************************************************


import math


INF = math.inf


def saturating_sum(values):
    """
    Return the sum of non-negative ``values``, which is `+\\infty` as soon as one summand is

    INPUT:

    - ``values`` -- an iterable of non-negative floats, possibly ``math.inf``

    EXAMPLES::

        >>> from qnet.utils import saturating_sum
        >>> saturating_sum([0.5, 0.25])
        0.75
        >>> saturating_sum([0.5, float("inf")])
        inf
        >>> saturating_sum([])
        0.0
    """
    total = 0.0
    for value in values:
        if math.isinf(value):
            return INF
        total += value
    return total


def significant(x, digits):
    """
    Round ``x`` to ``digits`` significant digits, leaving `\\pm\\infty` untouched

    EXAMPLES::

        >>> from qnet.utils import significant
        >>> significant(0.18872187554086717, 4)
        0.1887
        >>> significant(3.321928094887362, 12)
        3.32192809489
        >>> significant(0.0, 4)
        0.0
    """
    if math.isinf(x) or x == 0:
        return float(x)
    return float(f"{x:.{digits}g}")


def format_text(x, digits=4):
    """
    Format a number for the text reports

    EXAMPLES::

        >>> from qnet.utils import format_text
        >>> format_text(1.0)
        '1.000'
        >>> format_text(0.18872187554086717)
        '0.1887'
        >>> format_text(float("inf"))
        'inf'
    """
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{x:#.{digits}g}".rstrip(".")


def json_number(x, digits=12):
    """
    Encode a number for the JSON reports: 12 significant digits, the string ``"inf"`` for `+\\infty`

    EXAMPLES::

        >>> from qnet.utils import json_number
        >>> json_number(2.0)
        2.0
        >>> json_number(float("inf"))
        'inf'
    """
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return significant(x, digits)
