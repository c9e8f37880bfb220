from .workbench.cli import entrypoint

entrypoint()
