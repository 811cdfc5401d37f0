"""
Information commands (catalog, verify).
"""

import argparse

from .base import BaseCommand, CommandResult


def _print_frame(frame, output: str, header: bool = True) -> None:
    """Print a DataFrame as a table, JSON records or CSV."""
    if output == 'json':
        print(frame.to_json(orient='records', indent=2))
    elif output == 'csv':
        print(frame.to_csv(index=False, header=header).rstrip())
    else:
        print(frame.to_string(index=False, header=header))


class CatalogCommand(BaseCommand):
    """List the bundled simplex diagram families."""

    def execute(self, args: argparse.Namespace) -> CommandResult:
        # pylint: disable=C0415
        from ...api import catalog
        pd = self.deps.get_table_dependencies()['pd']

        frame = pd.DataFrame(catalog(),
                             columns=['geometry', 'family', 'parameters', 'constraint', 'label'])

        if args.filter:
            term = args.filter.lower()
            mask = (frame['family'].str.lower().str.contains(term, regex=False)
                    | frame['geometry'].str.lower().str.contains(term, regex=False)
                    | frame['label'].str.lower().str.contains(term, regex=False))
            frame = frame[mask]

        frame = frame.sort_values(args.sort, key=lambda s: s.str.lower(),
                                  ascending=not args.reverse, kind='stable')

        if frame.empty:
            print("No families found matching the criteria.")
            return CommandResult(success=True, data=frame)

        _print_frame(frame, args.output, header=not args.no_header)
        if args.output == 'table' and not args.no_header:
            print(f"\nTotal: {len(frame)} famil{'y' if len(frame) == 1 else 'ies'}")
            if args.filter:
                print(f"Filtered by: '{args.filter}'")
        return CommandResult(success=True, data=frame)


class VerifyCommand(BaseCommand):
    """Run an acceptance suite and report pass or fail per check."""

    def execute(self, args: argparse.Namespace) -> CommandResult:
        from ...verification import run_suite  # pylint: disable=C0415
        report = run_suite(args.suite)
        shown = report.assign(passed=report['passed'].map({True: 'pass', False: 'FAIL'}),
                              seconds=report['seconds'].round(2))
        _print_frame(shown, args.output)

        failed = int((~report['passed']).sum())
        if failed:
            return CommandResult(success=False, data=report, exit_code=1,
                                 message=f"{failed} of {len(report)} checks failed")
        if args.output == 'table':
            print(f"\nAll {len(report)} checks passed")
        return CommandResult(success=True, data=report)
