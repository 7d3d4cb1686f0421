# Running the verification harness from Python, and the matching CLI call.
#
# Run with:  python3 demos/07_verify.py

# %%
from frachardy.cli import parse_and_dispatch
from frachardy.verify import SUITES, VerifyConfig, run_all

# %% [markdown]
# Each suite returns ClaimCheck records with a relation, a tolerance and a status.

# %%
print("suites:", ", ".join(SUITES))
report = run_all(VerifyConfig(suite="punctured", seed=7))
for c in report.checks[:5]:
    print(c.id, c.status.value, c.lhs, c.relation.value, c.rhs)
print("all passed:", report.ok)

# %% [markdown]
# The same suite through the command line, as JSON lines. The return value is
# the process exit code.

# %%
code = parse_and_dispatch(["verify", "--suite", "segments", "--output", "jsonl"])
print("exit code", code)
