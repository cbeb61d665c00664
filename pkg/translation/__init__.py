"""ZQ, the Nakayama permutation and the Auslander window."""
