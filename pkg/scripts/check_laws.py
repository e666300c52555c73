"""Run every law checker, then every shipped mutant, and print the reports."""
import argparse

from freeap.laws import GenConfig, mutation_matrix, run_all


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--cases", type=int, default=200)
    parser.add_argument("--max-size", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--mutants", action="store_true", help="also run the mutation matrix")
    args = parser.parse_args()

    config = GenConfig(max_size=args.max_size, cases=args.cases, seed=args.seed)
    reports = run_all(config)
    for report in reports:
        print(report.render())
    if args.mutants:
        print()
        for name, mutant_reports in mutation_matrix(config).items():
            caught = [r.law for r in mutant_reports if not r.passed]
            print(f"{name:18s} caught by: {', '.join(caught) or 'NOTHING'}")
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    raise SystemExit(main())
