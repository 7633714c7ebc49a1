import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'lsverify.settings')
django.setup()
