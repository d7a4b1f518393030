# criterion number -> (passed, detail, seconds); filled by test_acceptance
REPORT: dict = {}
