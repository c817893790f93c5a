"""
Command-line interface of the analyzer.
"""
