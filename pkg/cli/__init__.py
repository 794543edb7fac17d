# Command-line surface: SFS grammar and verb dispatch
from cli.grammar import SfsSyntaxError, parse_sfs, format_sfs
from cli.commands import Command, CommandUsageError, Report, VERBS, build_parser, parse_command, run, main
