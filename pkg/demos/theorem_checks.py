"""Run every randomized check once and print a short table."""

from parapoly.harness import default_suite, run_all

for r in run_all(default_suite(trials=50, seed=1)):
    worst = ", ".join(f"{k}={v:.1e}" for k, v in sorted(r.metrics.items()))
    print(f"{r.name:26s} {'ok ' if r.passed else 'BAD'} rejections={r.rejections:<4d} {worst}")
