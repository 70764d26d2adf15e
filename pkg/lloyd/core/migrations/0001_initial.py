from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name='Run',
            fields=[
                ('id', models.AutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('subcommand', models.CharField(max_length=16)),
                ('parameters', models.JSONField(default=dict)),
                ('master_seed', models.CharField(blank=True, max_length=20)),
                ('version', models.CharField(max_length=32)),
                ('wall_time', models.FloatField(default=0.0)),
                ('outputs', models.JSONField(default=list)),
                ('meta', models.JSONField(default=dict)),
                ('created', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'ordering': ['-created'],
            },
        ),
    ]
