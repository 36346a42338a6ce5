# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import logging
from queue import Queue

import pytest

from knotcohomology.logging.formatter import Formatter, ColorFormatter, result_levelno
from knotcohomology.logging.filter import PyWarningsFilter
from knotcohomology.logging.base import QueueHandler, worker_name
from knotcohomology.logging.worker import Message, MessageSchema
from knotcohomology.logging.worker.writer import FileWriter


def make_record(msg, levelno=logging.INFO, name="knotcohomology"):
    return logging.LogRecord(name, levelno, __file__, 1, msg, None, None)


@pytest.mark.timeout(60)
def test_formatter_continuation_lines():
    formatted = Formatter().format(make_record("Table:\n| 5 | Z_2 |\n| 4 | Z_3 |"))
    lines = formatted.split("\n")
    assert len(lines) == 3
    assert lines[0].endswith("Table:")
    assert lines[1] == "│ | 5 | Z_2 |"
    assert lines[2] == "└─| 4 | Z_3 |"


@pytest.mark.timeout(60)
def test_color_formatter():
    formatted = ColorFormatter().format(make_record("Done", levelno=result_levelno))
    assert "[RESULT   ]" in formatted
    assert formatted.startswith("\x1b[")


@pytest.mark.timeout(60)
def test_warnings_filter():
    record = make_record("The 'missing' argument to fields is deprecated. Use 'load_default' instead.", logging.WARNING)
    assert PyWarningsFilter().filter(record)
    assert record.levelno == logging.DEBUG

    record = make_record("Something else", logging.WARNING)
    PyWarningsFilter().filter(record)
    assert record.levelno == logging.WARNING


@pytest.mark.timeout(60)
def test_queue_handler():
    queue = Queue()
    handler = QueueHandler(queue)
    handler.setFormatter(Formatter())
    handler.emit(make_record("Loading facts", logging.WARNING))

    message = MessageSchema().load(queue.get_nowait())
    assert isinstance(message, Message)
    assert message.type == "log"
    assert message.levelno == logging.WARNING
    assert message.msg.endswith("Loading facts")
    assert message.worker is None


@pytest.mark.timeout(60)
def test_queue_handler_tags_worker_records(tmp_path):
    queue = Queue()
    handler = QueueHandler(queue, worker="worker 2")
    handler.setFormatter(Formatter())
    handler.emit(make_record("Collapsing rho=3", logging.WARNING, name="knotcohomology.spectral"))

    message = MessageSchema().load(queue.get_nowait())
    assert message.worker == "worker 2"
    assert "[knotcohomology.spectral]" in message.msg

    writer = FileWriter(levelno=logging.DEBUG)
    writer.filename = tmp_path / "log.txt"
    writer.acquire()
    writer.emit(writer.format(message), message.levelno)
    writer.release()

    text = (tmp_path / "log.txt").read_text(encoding="utf-8")
    assert text.startswith("(worker 2) [")
    assert text.endswith("Collapsing rho=3\n")


class NamedProcess:
    def __init__(self, name):
        self.name = name


@pytest.mark.timeout(60)
@pytest.mark.parametrize(
    "name, expected",
    [
        ("ForkServerProcess-3", "worker 3"),
        ("SpawnProcess-12", "worker 12"),
        ("MainProcess", "MainProcess"),
    ],
)
def test_worker_name(name, expected):
    assert worker_name(NamedProcess(name)) == expected


@pytest.mark.timeout(60)
@pytest.mark.parametrize(
    "obj",
    [
        {"type": "teardown"},
        {"type": "enable_verbose"},
        {"type": "set_outdir", "outdir": "/tmp/out"},
    ]
)
def test_message_schema(obj):
    schema = MessageSchema()
    message = schema.load(obj)
    assert message.type == obj["type"]
    assert schema.dump(message) == obj


@pytest.mark.timeout(60)
def test_file_writer(tmp_path):
    writer = FileWriter(levelno=logging.WARNING)
    assert not writer.check()

    writer.filename = tmp_path / "err.txt"
    assert writer.check()

    assert not writer.filterMessage(Message(type="log", msg="debug", levelno=logging.DEBUG))
    assert writer.filterMessage(Message(type="log", msg="warning", levelno=logging.WARNING))

    writer.acquire()
    writer.emit("\x1b[30;43mDiscrepancy\x1b[K\x1b[0m", logging.WARNING)
    writer.release()

    assert (tmp_path / "err.txt").read_text() == "Discrepancy\n"
