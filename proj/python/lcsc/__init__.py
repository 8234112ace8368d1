"""Finite left cancellative small categories: skew products, quotients,
Zappa-Szep products, universal groups, and coverings.

The heavy lifting lives in the compiled extension; this package re-exports
it and adds dict-friendly helpers.
"""

import json as _json

try:
    from lcsc._core import *  # noqa: F401,F403
    from lcsc._core import Category, LcscError  # noqa: F401
except ImportError:  # development layout: extension on PYTHONPATH
    from _core import *  # noqa: F401,F403
    from _core import Category, LcscError  # noqa: F401


def category(data):
    """Build a validated Category from a dict or a JSON string."""
    if isinstance(data, str):
        return Category.from_json(data)
    return Category.from_json(_json.dumps(data))


def cocycle_json(values, target=None):
    """Serialize a cocycle given as {morphism: element}."""
    doc = {"values": values}
    if target is not None:
        doc["target"] = target
    return _json.dumps(doc)
