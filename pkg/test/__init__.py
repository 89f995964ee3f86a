"""
Test suite for hiercost
"""
