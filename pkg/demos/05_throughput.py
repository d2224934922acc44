"""Convert projected attempt counts into time without trusting trial clocks.

Per-trial wall clocks are noisy and hardware-bound. A cleaner route to a
time estimate: measure this machine's candidate throughput once, then
divide projected attempts by it. The resulting series is monotone in prefix
length by construction, unlike raw trial timings.
"""

from monkeytyper import (
    HAMLET_PHRASE,
    LETTERS_AND_SPACE,
    TargetText,
    convert_time,
    fit_growth_model,
    measure_throughput,
    published_averages,
    build_projection_table,
)

rate = measure_throughput(LETTERS_AND_SPACE, length=5, duration_seconds=0.3)
print(f"this machine generates about {rate:,.0f} length-5 candidates per second")

published = published_averages()
model = fit_growth_model(published["attempts"], published["seconds"])
table = build_projection_table(model, TargetText(HAMLET_PHRASE))

print(f"\n{'n':>3} {'projected attempts':>20} {'implied seconds':>16}")
for row in table.rows[::8]:
    implied = row.attempts / rate
    print(f"{row.prefix_len:>3} {row.attempts.to_string(3):>20} {implied.to_string(3):>16}")

implied_total = table.final.attempts / rate
breakdown = convert_time(implied_total)
print(
    f"\nat this throughput the full phrase needs {implied_total.to_string(3)} s "
    f"= {breakdown.years.to_string(3)} years"
)
print(f"(the universe is {breakdown.universe_age_years:.2e} years old)")
