# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import logging
from pathlib import Path
from asyncio import get_running_loop, new_event_loop, set_event_loop, all_tasks, current_task, gather

from marshmallow import ValidationError

from .message import Message, MessageSchema
from .writer import PrintWriter, FileWriter
from ..formatter import result_levelno

schema = MessageSchema()


def run(queue):
    """
    target of the logging process
    """
    loop = new_event_loop()
    set_event_loop(loop)

    try:
        loop.create_task(listen(queue))
        loop.run_forever()
    except KeyboardInterrupt:
        pass
    finally:
        loop.close()


async def listen(queue):
    from knotcohomology.logging import setup as setuplogging
    setuplogging(queue)

    loop = get_running_loop()

    printWriter = PrintWriter(levelno=result_levelno)
    logWriter = FileWriter(levelno=logging.DEBUG)
    errWriter = FileWriter(levelno=logging.WARNING)

    writers = [printWriter, logWriter, errWriter]

    for writer in writers:
        loop.create_task(writer.start())

    subscribers = [writer.queue for writer in writers]

    while True:
        message = await loop.run_in_executor(None, queue.get)

        if not isinstance(message, Message):
            try:
                message = schema.load(message)
            except ValidationError:
                queue.task_done()
                continue  # ignore invalid

        if message.type == "log":
            for subscriber in subscribers:
                await subscriber.put(message)

        elif message.type == "set_outdir":
            outdir = Path(message.outdir)
            outdir.mkdir(exist_ok=True, parents=True)

            logWriter.filename = outdir / "log.txt"
            logWriter.canWrite.set()

            errWriter.filename = outdir / "err.txt"
            errWriter.canWrite.set()

        elif message.type == "enable_verbose":
            printWriter.levelno = logging.DEBUG

        elif message.type == "enable_print":
            printWriter.canWrite.set()

        elif message.type == "disable_print":
            printWriter.canWrite.clear()

        elif message.type == "teardown":
            await gather(*[writer.queue.join() for writer in writers if writer.canWrite.is_set()])

            tasks = [t for t in all_tasks() if t is not current_task()]
            for task in tasks:
                task.cancel()
            await gather(*tasks, return_exceptions=True)

            queue.task_done()
            loop.stop()
            break

        queue.task_done()
