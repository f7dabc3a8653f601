from cwlpowers.suite import ClaimResult, claims, results_to_dicts, run_suite, suite_exit_code


def test_claim_names_unique():
    names = [c.name for c in claims()]
    assert len(names) == len(set(names))
    assert {c.name for c in claims() if c.long} == {"scroll-5/dseq", "scroll-6/dseq"}


def test_quick_claims_pass():
    seen = []
    res = run_suite(skip=["example-2-4/generic", "symmetric", "scroll"], progress=seen.append)
    assert seen == res
    assert {r.status for r in res} == {"PASS", "SKIP"}
    kernel = next(r for r in res if r.name == "example-1-9/kernel")
    assert "-x1*y3" in kernel.detail and kernel.location == "Example 1.9"
    assert suite_exit_code(res) == 0


def test_cap_gives_inconclusive():
    res = run_suite(pair_cap=20, skip=["example-2-4/generic", "scroll-4"])
    assert "INCONCLUSIVE" in {r.status for r in res}
    assert "FAIL" not in {r.status for r in res}
    assert suite_exit_code(res) == 2


def test_exit_codes():
    r = lambda s: ClaimResult("a", "b", s, 0.0)
    assert suite_exit_code([r("PASS"), r("SKIP")]) == 0
    assert suite_exit_code([r("PASS"), r("INCONCLUSIVE")]) == 2
    assert suite_exit_code([r("FAIL"), r("INCONCLUSIVE")]) == 1
    assert results_to_dicts([r("PASS")])[0]["status"] == "PASS"
