from queue import Queue
from threading import Event
from threading import Thread
from broomlab import common


logger = common.logging.getLogger(__name__)


class Worker(Thread):
    """Thread executing tasks from a given tasks queue"""
    def __init__(self, pool):
        Thread.__init__(self)
        self.pool = pool
        self.daemon = True
        self.start()

    def run(self):
        while True:
            task = self.pool.tasks.get()
            if task is None:  # shutdown sentinel
                self.pool.tasks.task_done()
                return
            func, args, kargs = task
            try:
                if not self.pool.stopped.is_set():
                    func(*args, **kargs)
            except Exception as e:
                logger.exception("Worker task failed: {0}".format(e))
                self.pool.errors.append(e)
                self.pool.stopped.set()
            self.pool.tasks.task_done()


class ThreadPool:
    """Pool of threads consuming tasks from a queue"""
    def __init__(self, num_threads):
        self.tasks = Queue(num_threads)
        self.stopped = Event()  # set to drop queued tasks
        self.errors = []
        self.workers = [Worker(self) for _ in range(num_threads)]

    def add_task(self, func, *args, **kargs):
        """Add a task to the queue"""
        self.tasks.put((func, args, kargs))

    def stop(self):
        """Skip tasks not yet started; running tasks poll `stopped`."""
        self.stopped.set()

    def wait_completion(self):
        """Wait for completion of all the tasks in the queue, re-raising
        the first task error."""
        self.tasks.join()
        if self.errors:
            raise self.errors[0]

    def shutdown(self):
        """Drop pending tasks and end every worker."""
        self.stopped.set()
        for _ in self.workers:
            self.tasks.put(None)
        for worker in self.workers:
            worker.join()
