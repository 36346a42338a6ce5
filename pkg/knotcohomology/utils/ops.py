# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:


def ravel(obj):
    if isinstance(obj, (str, dict)):
        return obj
    try:
        ret = []
        for val in obj:
            raveled_val = ravel(val)
            if not isinstance(raveled_val, (str, dict)):
                try:
                    ret.extend(raveled_val)
                    continue
                except TypeError:
                    pass
            ret.append(raveled_val)
        return ret
    except TypeError:
        return obj


def splitlist(values):
    """
    flatten repeated and comma separated command line values,
    ["a,b", "c"] -> ["a", "b", "c"]
    """
    if values is None:
        return []
    result = []
    for value in ravel([values]):
        result.extend(v.strip() for v in str(value).split(",") if len(v.strip()) > 0)
    return result
