"""
Common components shared across the project.
"""
