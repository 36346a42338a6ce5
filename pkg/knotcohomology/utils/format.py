# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:


def formatlist(in_list, conj="or"):
    from knotcohomology.utils import inflect_engine

    return inflect_engine.join([f'"{v}"' for v in in_list], conj=conj)


def formattitle(name):
    """
    "table2-left" -> "Table2 Left"
    """
    from inflection import titleize, underscore

    return titleize(underscore(name.replace("-", "_")))


def formatslug(name):
    """
    file name stem for a document name, "figure1 k=3" -> "figure1-k-3"
    """
    from inflection import parameterize

    return parameterize(name)
