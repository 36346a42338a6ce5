# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import sys
import logging

from marshmallow import ValidationError

logger = logging.getLogger("knotcohomology.cli")

exit_ok = 0
exit_failed = 1
exit_invalid = 2


def error_document(e):
    from ..model import ErrorDocumentSchema

    if isinstance(e, ValidationError):
        message = "; ".join(
            f"{key}: {' '.join(str(m) for m in messages)}" if isinstance(messages, list) else f"{key}: {messages}"
            for key, messages in sorted(e.normalized_messages().items())
        )
    else:
        message = str(e)

    return ErrorDocumentSchema().dump({"error": {"type": type(e).__name__, "message": message}})


def dispatch(config):
    from .report import (
        graph_complex_document,
        config_homology_document,
        tables_document,
        verify_document,
        report_document,
    )
    from ..spectral import load_facts

    command = config["command"]

    if command == "graph-complex":
        return graph_complex_document(
            config["a"], config.get("pred", "connected"), config["allow_large"], export_complex=config["complex"]
        )

    elif command == "config-homology":
        return config_homology_document(config["k"], config["n"], config.get("rep", "Z"), export_complex=config["complex"])

    elif command == "tables":
        facts = load_facts(config.get("facts"))
        return tables_document(config["which"], config.get("k"), config.get("mode", "pinned"), facts)

    elif command == "verify":
        only = config.get("only")
        if config["stretch"] is True:
            from .checks import check_ids

            only = (only or list(check_ids)) + ["graph-connected-a6"]
        return verify_document(only, config["jobs"])

    elif command == "report":
        return report_document(config.get("k"), config.get("facts"), config["jobs"])

    raise ValueError(f'Unknown command "{command}"')


def emit(document, fmt, outdir=None, stream=None):
    from ..io import DocumentFile

    if stream is None:
        stream = sys.stdout

    content = document.render(fmt)
    stream.write(content)
    stream.flush()

    if outdir is not None:
        with DocumentFile(outdir, document.name, fmt) as documentfile:
            documentfile.write(content)


def run(opts, stream=None):
    """
    execute one command, returns the exit code
    """
    from .. import __version__
    from .config import load_config
    from ..io import dumps_json
    from ..resource import output_dir
    from ..errors import KnotCohomologyError

    if stream is None:
        stream = sys.stdout

    logger.info(f"knotcohomology version {__version__}")

    try:
        config = load_config(opts)
        logger.debug(f"config={config}")

        document = dispatch(config)
    except (KnotCohomologyError, ValidationError) as e:
        logger.warning(f"Invalid input: {e}")
        stream.write(dumps_json(error_document(e)))
        stream.flush()
        return exit_invalid

    outdir = output_dir(config.get("outdir"))
    emit(document, config["format"], outdir, stream)

    if config["command"] == "verify" and document.content["passed"] is not True:
        failed = [result["id"] for result in document.content["checks"] if not result["passed"]]
        logger.warning(f"Failed checks: {', '.join(failed)}")
        return exit_failed

    return exit_ok


def main():
    from ..logging import (
        setupcontext as setuplogging,
        teardown as teardownlogging,
        Context,
    )
    from ..resource import output_dir

    debug = False
    code = exit_ok

    try:
        setuplogging(logging.DEBUG)

        from .parser import parse_args
        opts = parse_args()

        debug = opts.debug

        Context.enablePrint()
        if opts.verbose:
            Context.enableVerbose()
        outdir = output_dir(opts.outdir)
        if outdir is not None:
            Context.setOutdir(outdir)

        code = run(opts)
    except Exception as e:
        logger.exception("Exception: %s", e, exc_info=True)
        code = exit_failed

        if debug:
            import pdb

            pdb.post_mortem()
    finally:
        teardownlogging()

        # clean up orphan processes

        from multiprocessing import get_context

        ctx = get_context("forkserver")
        for p in ctx.active_children():
            p.terminate()

    sys.exit(code)
