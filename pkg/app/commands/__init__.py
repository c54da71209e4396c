"""Command handlers for the ``perm`` CLI."""

from app.commands.bench import cmd_bench
from app.commands.estimate import cmd_estimate
from app.commands.exact import cmd_exact
from app.commands.variance import cmd_variance
from app.commands.verify import cmd_verify

__all__ = ["cmd_bench", "cmd_estimate", "cmd_exact", "cmd_variance", "cmd_verify"]
